#pragma once

#include <cstdint>

#include "qloc/encodings.hpp"
#include "qloc/pauli.hpp"

namespace qloc {

/// Counter-based deterministic random stream. Two streams with equal
/// (master_seed, stream_id) produce identical output sequences; distinct
/// stream ids give statistically independent sequences. Output i depends
/// only on the key and the counter value, so replay never depends on
/// scheduling.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double next_double();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

/// 64-bit finalizer used for stream keying and id derivation.
std::uint64_t mix64(std::uint64_t x);

/// Order-sensitive combine for deriving stream ids from task coordinates.
std::uint64_t hash_combine64(std::uint64_t h, std::uint64_t v);

/// Sampling phases of the split-shot protocol.
inline constexpr std::uint64_t kPhaseSearch = 0;
inline constexpr std::uint64_t kPhaseEval = 1;

/// Stream id from sweep-task coordinates, independent of execution order.
std::uint64_t derive_stream_id(int encoding_kind, std::size_t p_index, int k,
                               std::size_t pauli_index, std::uint64_t phase);

struct ShotBudget {
  long n_search = 20000;
  long n_eval = 20000;

  void validate() const;
};

/// Born probability of the +1 outcome of a Pauli measurement,
/// (1 + Tr(P rho)) / 2, clamped against 1e-12-scale numerical excursions.
double outcome_probability(const PauliString& p, const DensityMatrix& rho);

/// Mean of N independent +/-1 outcomes drawn at the Born probability.
double sample_expectation(const PauliString& p, const DensityMatrix& rho,
                          long shots, RngStream& rng);

/// Split-shot estimate of mu_P = <P>_plus - <P>_minus with `shots` draws per
/// state, both taken from the same stream (plus first).
double estimate_mu(const PauliString& p, const DensityMatrix& rho_plus,
                   const DensityMatrix& rho_minus, long shots, RngStream& rng);

/// Hoeffding half-width sqrt(log(2/delta) / (2N)).
double hoeffding_epsilon(long shots, double delta);

/// ceil(log(2/delta) / (2 A^2)); throws HorizonError when A <= 0 since no
/// finite budget resolves a vanishing bias.
long required_shots(double bias, double delta);

} // namespace qloc

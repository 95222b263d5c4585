#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qloc/metrics.hpp"
#include "qloc/sampling.hpp"

namespace qloc {

/// Trace norms are evaluated only up to this dimension (8 qubits); larger
/// systems run locality-restricted quantities only.
inline constexpr std::size_t kTraceNormMaxDim = 256;

struct ExperimentConfig {
  EncodingSpec encoding;
  std::vector<int> k_values;    // ascending, unique
  std::vector<double> p_grid;   // strictly ascending
  ShotBudget budget;
  std::uint64_t master_seed = 42;
  bool compute_trace_norm = true;

  /// Throws ConfigError on violation. The default noise domain is
  /// [0, 0.75]; allow_extended_p widens it to [0, 1].
  void validate(bool allow_extended_p = false) const;
};

/// One (encoding, p, k) sweep point.
struct ResultRecord {
  std::string encoding;
  int n = 0;
  double theta = 0.0;
  double p = 0.0;
  int k = 0;
  std::optional<double> trace_norm;
  double a_k_exact = 0.0;
  double a_k_hat = 0.0;
  std::string p_star;  // exact argmax, text form
  int w_star = 0;
  double acc_empirical = 0.0;
  double acc_predicted_exact = 0.0;
  double acc_predicted_hat = 0.0;
  std::optional<double> accessible_fraction;
  std::optional<double> gap;
  double epsilon = 0.0;
  long n_search = 0;
  long n_eval = 0;
  std::uint64_t master_seed = 0;
};

struct PointFailure {
  int k = 0;
  double p = 0.0;
  std::string message;
};

struct SweepResult {
  std::vector<ResultRecord> records;  // k-major, p-minor
  std::vector<PointFailure> failures;
};

struct SelectOutcome {
  std::size_t index = 0;  // position in the candidate enumeration
  PauliString p_star;
  double mu_search = 0.0;
};

/// Search phase of the split-shot protocol: estimate mu for every candidate
/// with n_search shots per state and return the argmax of |mu_hat|
/// (canonical-order tie break). Each candidate owns a stream derived from
/// its coordinates, so the result is independent of scheduling.
SelectOutcome split_sample_select(const DensityMatrix& rho_plus,
                                  const DensityMatrix& rho_minus,
                                  const std::vector<PauliString>& candidates,
                                  long n_search, std::uint64_t master_seed,
                                  int encoding_kind, std::size_t p_index, int k);

struct EvalOutcome {
  double a_hat = 0.0;
  double acc_empirical = 0.0;
  double mu_eval = 0.0;
  double orientation = 1.0;  // sign fixed by the search phase
};

/// Evaluation phase: fresh shots on the selected observable. The decision
/// rule is oriented by sign(mu_search), never by the eval shots themselves.
EvalOutcome split_sample_evaluate(const DensityMatrix& rho_plus,
                                  const DensityMatrix& rho_minus,
                                  const PauliString& p_star,
                                  std::size_t pauli_index, double mu_search,
                                  long n_eval, std::uint64_t master_seed,
                                  int encoding_kind, std::size_t p_index, int k);

/// Full (k x p) sweep. Output ordering is k-major, p-minor regardless of the
/// execution schedule; per-point failures are collected, not fatal.
SweepResult run_sweep(const ExperimentConfig& config);

struct ThresholdReport {
  std::string encoding;
  int n = 0;
  double theta = 0.0;
  int k = 0;
  double epsilon = 0.0;
  std::optional<double> p_star;            // bisection on exact A_k
  std::optional<double> p_star_closed;     // closed-form inversion
  std::optional<double> sampled_crossing;  // first grid p with acc - 1/2 < eps/4
  long n_eval = 0;
};

/// Breakdown threshold for one k at eps = 1/sqrt(n_eval), with the sampled
/// grid crossing reported alongside for comparison.
ThresholdReport threshold_report(const ExperimentConfig& config, int k);

/// OpenMP worker-count control (no-ops without OpenMP).
void set_workers(int workers);
int max_workers();

} // namespace qloc

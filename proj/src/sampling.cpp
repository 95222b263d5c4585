#include "qloc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qloc/errors.hpp"

namespace qloc {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

std::uint64_t hash_combine64(std::uint64_t h, std::uint64_t v) {
  return mix64(h ^ (mix64(v + kGolden) + (h << 6) + (h >> 2)));
}

std::uint64_t derive_stream_id(int encoding_kind, std::size_t p_index, int k,
                               std::size_t pauli_index, std::uint64_t phase) {
  std::uint64_t h = 0x243F6A8885A308D3ull;
  h = hash_combine64(h, static_cast<std::uint64_t>(encoding_kind));
  h = hash_combine64(h, static_cast<std::uint64_t>(p_index));
  h = hash_combine64(h, static_cast<std::uint64_t>(k));
  h = hash_combine64(h, static_cast<std::uint64_t>(pauli_index));
  h = hash_combine64(h, phase);
  return h;
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : key_(mix64(master_seed ^ mix64(stream_id + kGolden))) {}

std::uint64_t RngStream::next_u64() {
  return mix64(key_ + (counter_++) * kGolden);
}

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

void ShotBudget::validate() const {
  if (n_search < 1 || n_eval < 1) {
    throw ConfigError("shot budget entries must be at least 1");
  }
}

double outcome_probability(const PauliString& p, const DensityMatrix& rho) {
  const double expv = pauli_trace_real(p, rho.mat);
  const double prob = 0.5 * (1.0 + expv);
  if (prob < -1e-12 || prob > 1.0 + 1e-12) {
    throw NumericalError("outcome probability far outside [0, 1]: " +
                         std::to_string(prob));
  }
  return std::clamp(prob, 0.0, 1.0);
}

double sample_expectation(const PauliString& p, const DensityMatrix& rho,
                          long shots, RngStream& rng) {
  if (shots < 1) throw std::invalid_argument("sample_expectation: shots < 1");
  const double prob = outcome_probability(p, rho);
  long plus = 0;
  for (long i = 0; i < shots; ++i) {
    if (rng.next_double() < prob) ++plus;
  }
  return (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) /
         static_cast<double>(shots);
}

double estimate_mu(const PauliString& p, const DensityMatrix& rho_plus,
                   const DensityMatrix& rho_minus, long shots, RngStream& rng) {
  const double mean_plus = sample_expectation(p, rho_plus, shots, rng);
  const double mean_minus = sample_expectation(p, rho_minus, shots, rng);
  return mean_plus - mean_minus;
}

double hoeffding_epsilon(long shots, double delta) {
  if (shots < 1) throw std::invalid_argument("hoeffding_epsilon: shots < 1");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("hoeffding_epsilon: delta must lie in (0, 1)");
  }
  return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(shots)));
}

long required_shots(double bias, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("required_shots: delta must lie in (0, 1)");
  }
  if (!(bias > 0.0)) {
    throw HorizonError("required_shots: bias <= 0, horizon crossed");
  }
  return static_cast<long>(std::ceil(std::log(2.0 / delta) / (2.0 * bias * bias)));
}

} // namespace qloc

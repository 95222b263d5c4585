#pragma once

#include <optional>

#include "qloc/coefficients.hpp"
#include "qloc/noise.hpp"

namespace qloc {

struct AkResult {
  double value = 0.0;         // max |mu_P| * lambda^w over weight <= k
  PauliString argmax_string;  // canonical-order tie break
  int argmax_weight = 0;
};

/// k-local Pauli-accessible amplitude computed from the p=0 coefficient
/// table. |lambda|^w is used so the value stays a valid amplitude beyond
/// p = 0.75 when extended sweeps are allowed.
AkResult exact_ak(const SignalCoefficients& coeffs, NoiseParam p, int k);

/// 1/2 + A/4 for a bias A in [0, 2].
double accuracy_from_bias(double bias);

/// 1/2 + trace_norm / 4 of the (noisy) signal operator.
double helstrom_accuracy(const SignalOperator& delta_noisy);

struct FractionAndGap {
  double fraction = 1.0;
  double gap = 0.0;
};

/// fraction = A_k / trace_norm (1 when both vanish), gap = trace_norm - A_k.
FractionAndGap accessible_fraction_and_gap(const AkResult& ak, double tn);

/// 2^n * max_{1 <= l <= k} |lambda|^l W_l. Weight 0 is omitted: the signal
/// operator is traceless.
double ak_upper_bound(const WeightSpectrum& spectrum, NoiseParam p, int k, int n);

/// Smallest p in [0, 0.75] with A_k(p) = eps, by bisection on the exact
/// amplitude. Returns nullopt when A_k(0) < eps (never resolvable).
std::optional<double> breakdown_threshold(const SignalCoefficients& coeffs,
                                          int k, double eps);

/// Closed-form inversion of the same threshold: the largest solution of
/// |mu_P| lambda(p)^w = eps over the coefficient table.
std::optional<double> breakdown_threshold_closed_form(
    const SignalCoefficients& coeffs, int k, double eps);

/// Exact two-outcome Fisher information at the symmetric parameter point:
/// p_plus = (1 + mean_bias)/2, dp/dtheta = mu/4, F = (mu/4)^2 / (p+ (1-p+)).
double fisher_information(double mu, double mean_bias);

} // namespace qloc

#include "qloc/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "qloc/eig.hpp"
#include "qloc/errors.hpp"

namespace qloc {

AkResult exact_ak(const SignalCoefficients& coeffs, NoiseParam p, int k) {
  if (k < 1 || k > coeffs.n) {
    throw std::invalid_argument("exact_ak: k must satisfy 1 <= k <= n");
  }
  const double lam_abs = std::abs(depolarizing_lambda(p));

  AkResult best;
  best.value = -1.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int w = weight(coeffs.strings[i]);
    if (w < 1 || w > k) continue;
    const double v = std::abs(coeffs.values[i]) * std::pow(lam_abs, w);
    if (v > best.value) {
      best.value = v;
      best.argmax_string = coeffs.strings[i];
      best.argmax_weight = w;
    }
  }
  if (best.value < 0.0) {
    throw std::invalid_argument("exact_ak: no candidate of weight <= k in table");
  }
  return best;
}

double accuracy_from_bias(double bias) {
  if (!(bias >= 0.0 && bias <= 2.0)) {
    throw std::invalid_argument("accuracy_from_bias: bias outside [0, 2]");
  }
  return 0.5 + bias / 4.0;
}

double helstrom_accuracy(const SignalOperator& delta_noisy) {
  return 0.5 + 0.25 * trace_norm(delta_noisy.mat);
}

FractionAndGap accessible_fraction_and_gap(const AkResult& ak, double tn) {
  if (tn < 0.0) throw std::invalid_argument("accessible_fraction: negative norm");
  FractionAndGap out;
  out.gap = tn - ak.value;
  if (tn < 1e-12 && ak.value < 1e-12) {
    out.fraction = 1.0;  // fully depolarized limit
  } else {
    out.fraction = ak.value / tn;
  }
  return out;
}

double ak_upper_bound(const WeightSpectrum& spectrum, NoiseParam p, int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("ak_upper_bound: bad k");
  if (spectrum.values.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("ak_upper_bound: spectrum length mismatch");
  }
  const double lam_abs = std::abs(depolarizing_lambda(p));
  double bound = 0.0;
  for (int l = 1; l <= k; ++l) {
    bound = std::max(bound, std::pow(lam_abs, l) *
                                spectrum.values[static_cast<std::size_t>(l)]);
  }
  return std::ldexp(bound, n);
}

namespace {

double ak_value_at(const SignalCoefficients& coeffs, int k, double p) {
  return exact_ak(coeffs, NoiseParam(p), k).value;
}

} // namespace

std::optional<double> breakdown_threshold(const SignalCoefficients& coeffs,
                                          int k, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("breakdown_threshold: eps <= 0");
  if (ak_value_at(coeffs, k, 0.0) < eps) return std::nullopt;

  // A_k is continuous and nonincreasing on [0, 0.75] and ends at 0, so a
  // crossing exists; bisect until the amplitude pins eps.
  double lo = 0.0, hi = 0.75;
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double a = ak_value_at(coeffs, k, mid);
    if (std::abs(a - eps) <= 1e-9 || hi - lo < 1e-15) return mid;
    if (a > eps) lo = mid;
    else hi = mid;
  }
  return mid;
}

std::optional<double> breakdown_threshold_closed_form(
    const SignalCoefficients& coeffs, int k, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("breakdown_threshold: eps <= 0");
  std::optional<double> best;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int w = weight(coeffs.strings[i]);
    if (w < 1 || w > k) continue;
    const double mag = std::abs(coeffs.values[i]);
    if (mag < eps) continue;
    // |mu| lambda^w = eps  =>  p = (3/4)(1 - (eps/|mu|)^{1/w})
    const double p = 0.75 * (1.0 - std::pow(eps / mag, 1.0 / w));
    if (!best || p > *best) best = p;
  }
  return best;
}

double fisher_information(double mu, double mean_bias) {
  const double p_plus = 0.5 * (1.0 + mean_bias);
  if (p_plus <= 0.0 || p_plus >= 1.0) {
    throw DegenerateOutcomeError(
        "fisher_information: outcome probability is degenerate");
  }
  const double slope = mu / 4.0;
  return slope * slope / (p_plus * (1.0 - p_plus));
}

} // namespace qloc

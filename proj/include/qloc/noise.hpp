#pragma once

#include "qloc/coefficients.hpp"
#include "qloc/encodings.hpp"

namespace qloc {

/// Depolarizing probability, validated to [0, 1].
struct NoiseParam {
  double p = 0.0;

  NoiseParam() = default;
  explicit NoiseParam(double p_);
};

/// Contraction factor lambda(p) = 1 - 4p/3 of the single-qubit depolarizing
/// channel acting on a non-identity Pauli.
double depolarizing_lambda(NoiseParam p);

/// Independent single-qubit depolarizing channel applied to every qubit via
/// the four-term Kraus sum. Trace-preserving.
DensityMatrix depolarize_density(const DensityMatrix& rho, NoiseParam p);

/// Same channel on a raw Hermitian operator (the channel is linear, so it
/// applies to signal operators as well as states).
ComplexMatrix depolarize_operator(const ComplexMatrix& a, NoiseParam p);

/// Diagonal action in the Pauli basis: each coefficient scales by
/// lambda(p)^weight(P). Weight-0 entries are untouched.
SignalCoefficients contract_signal(const SignalCoefficients& coeffs, NoiseParam p);

} // namespace qloc

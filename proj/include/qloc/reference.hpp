#pragma once

#include "qloc/encodings.hpp"
#include "qloc/noise.hpp"
#include "qloc/pauli.hpp"

namespace qloc::ref {

/// Serial reference implementations, kept deliberately naive. Tests weld the
/// fast kernels to these; the benchmark compares against them.

/// Depolarizing channel as explicit Kraus-matrix conjugations: for each qubit
/// the four operators sqrt(1-p) I, sqrt(p/3) X, sqrt(p/3) Y, sqrt(p/3) Z are
/// realized as full 2^n x 2^n matrices and summed as K rho K^dagger.
ComplexMatrix depolarize_operator(const ComplexMatrix& a, NoiseParam p);

/// Tr(P * A) by realizing P densely.
Cd pauli_trace(const PauliString& p, const ComplexMatrix& a);

} // namespace qloc::ref

#pragma once

#include <vector>

#include "qloc/encodings.hpp"
#include "qloc/pauli.hpp"

namespace qloc {

/// Signal coefficients mu_P = Tr(P * delta_rho) keyed by Pauli string, in
/// canonical order. The unnormalized convention is used throughout; the
/// 2^{-n}-scaled c_P appears only inside weight_spectrum.
struct SignalCoefficients {
  int n = 0;
  std::vector<PauliString> strings;
  std::vector<double> values;

  static SignalCoefficients from_signal(const SignalOperator& delta,
                                        std::vector<PauliString> strings);

  std::size_t size() const { return strings.size(); }
};

} // namespace qloc

#include "qloc/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "qloc/errors.hpp"

namespace qloc {

SignalCoefficients SignalCoefficients::from_signal(
    const SignalOperator& delta, std::vector<PauliString> strings) {
  SignalCoefficients c;
  c.n = delta.n;
  c.strings = std::move(strings);
  c.values.resize(c.strings.size());

  std::vector<Cd> traces(c.strings.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(c.strings.size()); ++i) {
    traces[static_cast<std::size_t>(i)] =
        pauli_trace(c.strings[static_cast<std::size_t>(i)], delta.mat);
  }
  for (std::size_t i = 0; i < c.strings.size(); ++i) {
    if (std::abs(traces[i].imag()) >= 1e-10) {
      throw NumericalError("signal coefficient has imaginary residue on " +
                           c.strings[i].text());
    }
    c.values[i] = traces[i].real();
  }
  return c;
}

NoiseParam::NoiseParam(double p_) : p(p_) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
  }
}

double depolarizing_lambda(NoiseParam p) {
  return 1.0 - 4.0 * p.p / 3.0;
}

namespace {

// One qubit of the channel, in place with a scratch buffer. Entries whose
// row and column agree on the qubit's bit mix with the bit-flipped entry;
// entries that disagree scale by lambda.
void depolarize_qubit(ComplexMatrix& rho, ComplexMatrix& scratch,
                      std::size_t mask, double p) {
  const double keep = 1.0 - 2.0 * p / 3.0;
  const double mix = 2.0 * p / 3.0;
  const double lam = 1.0 - 4.0 * p / 3.0;
  const std::size_t dim = rho.dim();

#pragma omp parallel for schedule(static)
  for (long long rr = 0; rr < static_cast<long long>(dim); ++rr) {
    const auto r = static_cast<std::size_t>(rr);
    for (std::size_t c = 0; c < dim; ++c) {
      if (((r ^ c) & mask) == 0) {
        scratch(r, c) = keep * rho(r, c) + mix * rho(r ^ mask, c ^ mask);
      } else {
        scratch(r, c) = lam * rho(r, c);
      }
    }
  }
  std::swap(rho, scratch);
}

} // namespace

ComplexMatrix depolarize_operator(const ComplexMatrix& a, NoiseParam p) {
  const int n = qubit_count_for_dim(a.dim());
  ComplexMatrix rho = a;
  ComplexMatrix scratch(a.dim());
  for (int q = 0; q < n; ++q) {
    depolarize_qubit(rho, scratch, std::size_t{1} << (n - 1 - q), p.p);
  }
  return rho;
}

DensityMatrix depolarize_density(const DensityMatrix& rho, NoiseParam p) {
  DensityMatrix out;
  out.n = rho.n;
  out.mat = depolarize_operator(rho.mat, p);
  return out;
}

SignalCoefficients contract_signal(const SignalCoefficients& coeffs,
                                   NoiseParam p) {
  const double lam = depolarizing_lambda(p);
  SignalCoefficients out = coeffs;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int w = weight(out.strings[i]);
    out.values[i] *= std::pow(lam, w);
  }
  return out;
}

} // namespace qloc

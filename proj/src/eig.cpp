#include "qloc/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qloc/errors.hpp"

namespace qloc {

namespace {

double offdiag_frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t p = 0; p < m.dim(); ++p)
    for (std::size_t q = p + 1; q < m.dim(); ++q) s += std::norm(m(p, q));
  return std::sqrt(2.0 * s);
}

} // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& a, int max_sweeps) {
  require_hermitian(a, 1e-9);
  const std::size_t d = a.dim();

  ComplexMatrix m = a;
  ComplexMatrix v = ComplexMatrix::identity(d);

  const double scale = std::max(1.0, frobenius_norm(m));
  const double target = 1e-12 * scale;
  // Rotations on entries this small cannot move the off-diagonal norm past
  // the convergence target.
  const double skip = target / (static_cast<double>(d) * d);

  bool converged = d == 1;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const Cd apq = m(p, q);
        const double mag = std::abs(apq);
        if (mag <= skip) continue;

        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const Cd phase = apq / mag;  // e^{i beta}

        const double tau = (app - aqq) / (2.0 * mag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Cd sp = s * phase;  // s * e^{i beta}

        // Columns: M <- M * U, with U = [[c, -s e^{i b}], [s e^{-i b}, c]]
        // on the (p, q) plane.
        for (std::size_t i = 0; i < d; ++i) {
          const Cd mp = m(i, p);
          const Cd mq = m(i, q);
          m(i, p) = c * mp + std::conj(sp) * mq;
          m(i, q) = -sp * mp + c * mq;
        }
        // Rows: M <- U^dagger * M.
        for (std::size_t i = 0; i < d; ++i) {
          const Cd mp = m(p, i);
          const Cd mq = m(q, i);
          m(p, i) = c * mp + sp * mq;
          m(q, i) = -std::conj(sp) * mp + c * mq;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = Cd(m(p, p).real(), 0.0);
        m(q, q) = Cd(m(q, q).real(), 0.0);

        for (std::size_t i = 0; i < d; ++i) {
          const Cd vp = v(i, p);
          const Cd vq = v(i, q);
          v(i, p) = c * vp + std::conj(sp) * vq;
          v(i, q) = -sp * vp + c * vq;
        }
      }
    }
    converged = offdiag_frobenius(m) < target;
  }
  if (!converged) {
    throw NumericalError("hermitian_eigensystem: no convergence after " +
                         std::to_string(max_sweeps) + " sweeps");
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&m](std::size_t i, std::size_t j) {
    return m(i, i).real() < m(j, j).real();
  });

  EigenSystem sys;
  sys.values.resize(d);
  sys.vectors = ComplexMatrix(d);
  for (std::size_t k = 0; k < d; ++k) {
    sys.values[k] = m(order[k], order[k]).real();
    for (std::size_t i = 0; i < d; ++i) sys.vectors(i, k) = v(i, order[k]);
  }
  return sys;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, int max_sweeps) {
  return hermitian_eigensystem(a, max_sweeps).values;
}

double trace_norm(const ComplexMatrix& a) {
  const auto vals = hermitian_eigenvalues(a);
  double s = 0.0;
  for (double x : vals) s += std::abs(x);
  return s;
}

ComplexMatrix sign_operator(const ComplexMatrix& a) {
  const EigenSystem sys = hermitian_eigensystem(a);
  const std::size_t d = a.dim();

  double top = 0.0;
  for (double x : sys.values) top = std::max(top, std::abs(x));
  const double zero_tol = 1e-12 * std::max(1.0, top);

  ComplexMatrix m(d);
  for (std::size_t k = 0; k < d; ++k) {
    double s = 0.0;
    if (sys.values[k] > zero_tol) s = 1.0;
    else if (sys.values[k] < -zero_tol) s = -1.0;
    if (s == 0.0) continue;
    for (std::size_t r = 0; r < d; ++r) {
      const Cd vr = sys.vectors(r, k);
      for (std::size_t c = 0; c < d; ++c) {
        m(r, c) += s * vr * std::conj(sys.vectors(c, k));
      }
    }
  }
  return m;
}

double min_eigenvalue(const ComplexMatrix& a) {
  return hermitian_eigenvalues(a).front();
}

} // namespace qloc

#include "qloc/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qloc {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw std::invalid_argument("matrix dimension out of range: " +
                                std::to_string(dim));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Cd>>& rows) {
  ComplexMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw std::invalid_argument("from_rows: ragged input");
    }
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch in +=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch in -=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Cd s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

Cd ComplexMatrix::trace() const {
  Cd t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& v : a_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  if (da * db > kMaxDim) {
    throw std::invalid_argument("kron: output dimension exceeds limit");
  }
  ComplexMatrix m(da * db);
  for (std::size_t ra = 0; ra < da; ++ra)
    for (std::size_t ca = 0; ca < da; ++ca) {
      const Cd f = a(ra, ca);
      if (f == Cd(0.0)) continue;
      for (std::size_t rb = 0; rb < db; ++rb)
        for (std::size_t cb = 0; cb < db; ++cb)
          m(ra * db + rb, ca * db + cb) = f * b(rb, cb);
    }
  return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matmul: dim mismatch");
  const std::size_t d = a.dim();
  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) {
      const Cd f = a(r, k);
      if (f == Cd(0.0)) continue;
      for (std::size_t c = 0; c < d; ++c) m(r, c) += f * b(k, c);
    }
  return m;
}

Cd trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("trace_product: dim mismatch");
  }
  Cd t = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) t += a(r, c) * b(c, r);
  return t;
}

double hermiticity_deviation(const ComplexMatrix& a) {
  double dev = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = r; c < a.dim(); ++c)
      dev = std::max(dev, std::abs(a(r, c) - std::conj(a(c, r))));
  return dev;
}

void require_hermitian(const ComplexMatrix& a, double tol) {
  const double dev = hermiticity_deviation(a);
  if (dev > tol) {
    throw std::invalid_argument("matrix is not Hermitian (deviation " +
                                std::to_string(dev) + ")");
  }
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dim mismatch");
  double d = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      d = std::max(d, std::abs(a(r, c) - b(r, c)));
  return d;
}

int qubit_count_for_dim(std::size_t dim) {
  int n = 0;
  std::size_t d = dim;
  while (d > 1) {
    if (d % 2 != 0) throw std::invalid_argument("dimension is not a power of two");
    d /= 2;
    ++n;
  }
  if (dim == 0) throw std::invalid_argument("zero dimension");
  return n;
}

} // namespace qloc

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qloc {

using Cd = std::complex<double>;

/// Hard cap on realized operator dimension (12 qubits).
inline constexpr std::size_t kMaxDim = 4096;

/// Dense square complex matrix, row-major. Dimensions in this project are
/// always powers of two (2^n for n qubits).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from_rows(const std::vector<std::vector<Cd>>& rows);

  std::size_t dim() const { return dim_; }

  Cd& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const Cd& operator()(std::size_t r, std::size_t c) const {
    return a_[r * dim_ + c];
  }

  Cd* data() { return a_.data(); }
  const Cd* data() const { return a_.data(); }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Cd s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(Cd s, ComplexMatrix a) {
    a *= s;
    return a;
  }

  /// Conjugate transpose.
  ComplexMatrix adjoint() const;

  Cd trace() const;
  bool all_finite() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Cd> a_;
};

/// Kronecker product; throws if the result would exceed kMaxDim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Plain O(dim^3) product. Small matrices only; kept simple on purpose.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(A*B) without forming the product: sum over A(r,c)*B(c,r).
Cd trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_{r,c} |A(r,c) - conj(A(c,r))|
double hermiticity_deviation(const ComplexMatrix& a);

/// Throws std::invalid_argument when the deviation exceeds tol.
void require_hermitian(const ComplexMatrix& a, double tol = 1e-9);

double frobenius_norm(const ComplexMatrix& a);

/// max entrywise |A - B|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Number of qubits for a 2^n dimension; throws if dim is not a power of two.
int qubit_count_for_dim(std::size_t dim);

} // namespace qloc

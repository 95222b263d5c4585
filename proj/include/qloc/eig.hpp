#pragma once

#include <vector>

#include "qloc/matrix.hpp"

namespace qloc {

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column i is the eigenvector of values[i]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Converges when the
/// off-diagonal Frobenius norm drops below 1e-12 relative to the matrix scale;
/// throws NumericalError if that does not happen within the sweep cap.
EigenSystem hermitian_eigensystem(const ComplexMatrix& a, int max_sweeps = 60);

/// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          int max_sweeps = 60);

/// Sum of absolute eigenvalues.
double trace_norm(const ComplexMatrix& a);

/// Operator with the same eigenvectors as `a` and eigenvalues mapped through
/// sign(); eigenvalues at numerical zero map to 0 so the operator norm stays
/// at most 1.
ComplexMatrix sign_operator(const ComplexMatrix& a);

double min_eigenvalue(const ComplexMatrix& a);

} // namespace qloc

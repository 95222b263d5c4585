#include "qloc/reference.hpp"

#include <cmath>

namespace qloc::ref {

namespace {

ComplexMatrix embed_single_qubit(const ComplexMatrix& op, int qubit, int n) {
  ComplexMatrix out = (qubit == 0) ? op : ComplexMatrix::identity(2);
  for (int q = 1; q < n; ++q) {
    out = kron(out, (q == qubit) ? op : ComplexMatrix::identity(2));
  }
  return out;
}

} // namespace

ComplexMatrix depolarize_operator(const ComplexMatrix& a, NoiseParam p) {
  const int n = qubit_count_for_dim(a.dim());
  const double s_keep = std::sqrt(1.0 - p.p);
  const double s_mix = std::sqrt(p.p / 3.0);

  ComplexMatrix rho = a;
  for (int q = 0; q < n; ++q) {
    ComplexMatrix next(a.dim());
    const char letters[3] = {'X', 'Y', 'Z'};
    {
      const ComplexMatrix k0 = s_keep * ComplexMatrix::identity(a.dim());
      next += matmul(matmul(k0, rho), k0.adjoint());
    }
    for (char letter : letters) {
      PauliString single(1, letter == 'Z' ? 0u : 1u, letter == 'X' ? 0u : 1u);
      const ComplexMatrix k =
          s_mix * embed_single_qubit(realize_matrix(single), q, n);
      next += matmul(matmul(k, rho), k.adjoint());
    }
    rho = next;
  }
  return rho;
}

Cd pauli_trace(const PauliString& p, const ComplexMatrix& a) {
  return trace_product(realize_matrix(p), a);
}

} // namespace qloc::ref

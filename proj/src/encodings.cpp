#include "qloc/encodings.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qloc/errors.hpp"
#include "qloc/pauli.hpp"

namespace qloc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::size_t index_bit_mask(int qubit, int n) {
  if (qubit < 0 || qubit >= n) {
    throw std::invalid_argument("gate qubit index out of range");
  }
  return std::size_t{1} << (n - 1 - qubit);
}

void apply_single_qubit(Statevector& psi, int qubit, const Cd u[2][2]) {
  const std::size_t m = index_bit_mask(qubit, psi.n);
  const std::size_t dim = psi.amp.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & m) continue;
    const Cd a0 = psi.amp[i];
    const Cd a1 = psi.amp[i | m];
    psi.amp[i] = u[0][0] * a0 + u[0][1] * a1;
    psi.amp[i | m] = u[1][0] * a0 + u[1][1] * a1;
  }
}

// rho <- U rho U^dagger for a single-qubit unitary.
void conjugate_single_qubit(ComplexMatrix& rho, int qubit, const Cd u[2][2]) {
  const int n = qubit_count_for_dim(rho.dim());
  const std::size_t m = index_bit_mask(qubit, n);
  const std::size_t dim = rho.dim();
  for (std::size_t r = 0; r < dim; ++r) {
    if (r & m) continue;
    for (std::size_t c = 0; c < dim; ++c) {
      const Cd a0 = rho(r, c);
      const Cd a1 = rho(r | m, c);
      rho(r, c) = u[0][0] * a0 + u[0][1] * a1;
      rho(r | m, c) = u[1][0] * a0 + u[1][1] * a1;
    }
  }
  for (std::size_t c = 0; c < dim; ++c) {
    if (c & m) continue;
    for (std::size_t r = 0; r < dim; ++r) {
      const Cd a0 = rho(r, c);
      const Cd a1 = rho(r, c | m);
      rho(r, c) = a0 * std::conj(u[0][0]) + a1 * std::conj(u[0][1]);
      rho(r, c | m) = a0 * std::conj(u[1][0]) + a1 * std::conj(u[1][1]);
    }
  }
}

void cnot_masks(int control, int target, int n, std::size_t& mc, std::size_t& mt) {
  if (control == target) {
    throw std::invalid_argument("CNOT control and target must differ");
  }
  mc = index_bit_mask(control, n);
  mt = index_bit_mask(target, n);
}

} // namespace

std::string encoding_kind_name(EncodingKind kind) {
  return kind == EncodingKind::kProduct ? "product" : "entangling";
}

EncodingKind encoding_kind_from_name(const std::string& name) {
  if (name == "product") return EncodingKind::kProduct;
  if (name == "entangling") return EncodingKind::kEntangling;
  throw ConfigError("unknown encoding kind: " + name);
}

void EncodingSpec::validate() const {
  if (n < 1 || n > kLocalEnumMaxQubits) {
    throw ConfigError("encoding qubit count out of range: " + std::to_string(n));
  }
  if (!std::isfinite(theta)) throw ConfigError("theta must be finite");
  if (kind == EncodingKind::kEntangling && n < 2) {
    throw ConfigError("entangling encoding needs at least 2 qubits");
  }
}

Statevector Statevector::zero_state(int n) {
  if (n < 1 || (std::size_t{1} << n) > kMaxDim) {
    throw std::invalid_argument("statevector qubit count out of range");
  }
  Statevector psi;
  psi.n = n;
  psi.amp.assign(std::size_t{1} << n, Cd(0.0));
  psi.amp[0] = 1.0;
  return psi;
}

double Statevector::norm2() const {
  double s = 0.0;
  for (const auto& a : amp) s += std::norm(a);
  return s;
}

DensityMatrix DensityMatrix::from_statevector(const Statevector& psi) {
  DensityMatrix rho;
  rho.n = psi.n;
  rho.mat = ComplexMatrix(psi.amp.size());
  for (std::size_t r = 0; r < psi.amp.size(); ++r)
    for (std::size_t c = 0; c < psi.amp.size(); ++c)
      rho.mat(r, c) = psi.amp[r] * std::conj(psi.amp[c]);
  return rho;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
  if (hermiticity_deviation(m) > 1e-10) {
    throw NumericalError("density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - Cd(1.0)) > 1e-10) {
    throw NumericalError("density matrix trace differs from 1");
  }
  DensityMatrix rho;
  rho.n = qubit_count_for_dim(m.dim());
  rho.mat = std::move(m);
  return rho;
}

void apply_gate(Statevector& psi, const Gate& g) {
  switch (g.kind) {
    case GateKind::kHadamard: {
      const Cd u[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
      apply_single_qubit(psi, g.q0, u);
      return;
    }
    case GateKind::kRz: {
      // RZ(theta) = diag(e^{-i theta/2}, e^{+i theta/2})
      const Cd f0 = std::exp(Cd(0.0, -g.theta / 2.0));
      const Cd f1 = std::exp(Cd(0.0, +g.theta / 2.0));
      const Cd u[2][2] = {{f0, 0.0}, {0.0, f1}};
      apply_single_qubit(psi, g.q0, u);
      return;
    }
    case GateKind::kZ: {
      const Cd u[2][2] = {{1.0, 0.0}, {0.0, -1.0}};
      apply_single_qubit(psi, g.q0, u);
      return;
    }
    case GateKind::kCnot: {
      std::size_t mc = 0, mt = 0;
      cnot_masks(g.q0, g.q1, psi.n, mc, mt);
      for (std::size_t i = 0; i < psi.amp.size(); ++i) {
        if ((i & mc) && !(i & mt)) std::swap(psi.amp[i], psi.amp[i | mt]);
      }
      return;
    }
  }
  throw std::invalid_argument("unknown gate kind");
}

void apply_gate(ComplexMatrix& rho, const Gate& g) {
  switch (g.kind) {
    case GateKind::kHadamard: {
      const Cd u[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
      conjugate_single_qubit(rho, g.q0, u);
      return;
    }
    case GateKind::kRz: {
      const Cd f0 = std::exp(Cd(0.0, -g.theta / 2.0));
      const Cd f1 = std::exp(Cd(0.0, +g.theta / 2.0));
      const Cd u[2][2] = {{f0, 0.0}, {0.0, f1}};
      conjugate_single_qubit(rho, g.q0, u);
      return;
    }
    case GateKind::kZ: {
      const Cd u[2][2] = {{1.0, 0.0}, {0.0, -1.0}};
      conjugate_single_qubit(rho, g.q0, u);
      return;
    }
    case GateKind::kCnot: {
      const int n = qubit_count_for_dim(rho.dim());
      std::size_t mc = 0, mt = 0;
      cnot_masks(g.q0, g.q1, n, mc, mt);
      auto permute = [mc, mt](std::size_t i) {
        return (i & mc) ? (i ^ mt) : i;
      };
      ComplexMatrix out(rho.dim());
      for (std::size_t r = 0; r < rho.dim(); ++r)
        for (std::size_t c = 0; c < rho.dim(); ++c)
          out(permute(r), permute(c)) = rho(r, c);
      rho = std::move(out);
      return;
    }
  }
  throw std::invalid_argument("unknown gate kind");
}

std::pair<DensityMatrix, DensityMatrix> prepare_product_pair(int n) {
  if (n < 1 || (std::size_t{1} << n) > kMaxDim) {
    throw std::invalid_argument("prepare_product_pair: n out of range");
  }
  Statevector plus = Statevector::zero_state(n);
  Statevector minus = Statevector::zero_state(n);
  const double amp = std::pow(2.0, -0.5 * n);
  for (std::size_t b = 0; b < plus.amp.size(); ++b) {
    plus.amp[b] = amp;
    minus.amp[b] = (std::popcount(b) & 1) ? -amp : amp;
  }
  return {DensityMatrix::from_statevector(plus),
          DensityMatrix::from_statevector(minus)};
}

Statevector entangling_state(int n, double theta) {
  Statevector psi = Statevector::zero_state(n);
  for (int q = 0; q < n; ++q) apply_gate(psi, Gate::hadamard(q));
  for (int q = 0; q < n; ++q) apply_gate(psi, Gate::rz(q, theta));
  for (int q = 0; q < n; ++q) apply_gate(psi, Gate::cnot(q, (q + 1) % n));
  return psi;
}

std::pair<DensityMatrix, DensityMatrix> prepare_entangling_pair(
    const EncodingSpec& spec) {
  if (spec.kind != EncodingKind::kEntangling) {
    throw std::invalid_argument("prepare_entangling_pair: wrong encoding kind");
  }
  spec.validate();
  Statevector plus = entangling_state(spec.n, spec.theta);
  Statevector minus = plus;
  apply_gate(minus, Gate::z(0));
  return {DensityMatrix::from_statevector(plus),
          DensityMatrix::from_statevector(minus)};
}

std::pair<DensityMatrix, DensityMatrix> prepare_pair(const EncodingSpec& spec) {
  spec.validate();
  if (spec.kind == EncodingKind::kProduct) return prepare_product_pair(spec.n);
  return prepare_entangling_pair(spec);
}

SignalOperator signal_operator(const DensityMatrix& rho_plus,
                               const DensityMatrix& rho_minus) {
  if (rho_plus.mat.dim() != rho_minus.mat.dim()) {
    throw std::invalid_argument("signal_operator: dimension mismatch");
  }
  SignalOperator delta;
  delta.n = rho_plus.n;
  delta.mat = rho_plus.mat - rho_minus.mat;
  if (hermiticity_deviation(delta.mat) > 1e-10) {
    throw NumericalError("signal operator is not Hermitian");
  }
  if (std::abs(delta.mat.trace()) > 1e-10) {
    throw NumericalError("signal operator is not traceless");
  }
  return delta;
}

} // namespace qloc

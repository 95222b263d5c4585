#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qloc/matrix.hpp"

namespace qloc {

enum class EncodingKind { kProduct = 0, kEntangling = 1 };

std::string encoding_kind_name(EncodingKind kind);
EncodingKind encoding_kind_from_name(const std::string& name);

struct EncodingSpec {
  EncodingKind kind = EncodingKind::kProduct;
  int n = 4;
  double theta = 0.0;  // entangling only

  void validate() const;
};

/// Pure-state amplitudes, length 2^n. Qubit 0 owns the most significant bit
/// of the basis index (matching the leftmost letter of a Pauli text form).
struct Statevector {
  int n = 0;
  std::vector<Cd> amp;

  static Statevector zero_state(int n);
  double norm2() const;
};

struct DensityMatrix {
  int n = 0;
  ComplexMatrix mat;

  /// Outer product |psi><psi|.
  static DensityMatrix from_statevector(const Statevector& psi);
  /// Validates Hermiticity and unit trace (1e-10 each).
  static DensityMatrix from_matrix(ComplexMatrix m);
};

/// Hermitian, traceless difference of two density matrices.
struct SignalOperator {
  int n = 0;
  ComplexMatrix mat;
};

enum class GateKind { kHadamard, kRz, kCnot, kZ };

struct Gate {
  GateKind kind;
  int q0 = 0;       // target (H, RZ, Z) or control (CNOT)
  int q1 = 0;       // CNOT target
  double theta = 0; // RZ only

  static Gate hadamard(int q) { return {GateKind::kHadamard, q, 0, 0.0}; }
  static Gate rz(int q, double theta) { return {GateKind::kRz, q, 0, theta}; }
  static Gate cnot(int control, int target) {
    return {GateKind::kCnot, control, target, 0.0};
  }
  static Gate z(int q) { return {GateKind::kZ, q, 0, 0.0}; }
};

/// Left action U|psi>.
void apply_gate(Statevector& psi, const Gate& g);

/// Unitary conjugation U rho U^dagger.
void apply_gate(ComplexMatrix& rho, const Gate& g);

/// (|+><+|^n, |-><-|^n): the weight-1 reference encoding.
std::pair<DensityMatrix, DensityMatrix> prepare_product_pair(int n);

/// |psi+> = CNOT-ring . RZ(theta)^n . H^n |0...0>, |psi-> = Z on qubit 0
/// applied to |psi+>. The CNOT ring runs 0->1, 1->2, ..., (n-1)->0 in
/// ascending control order. Requires n >= 2.
std::pair<DensityMatrix, DensityMatrix> prepare_entangling_pair(
    const EncodingSpec& spec);

std::pair<DensityMatrix, DensityMatrix> prepare_pair(const EncodingSpec& spec);

SignalOperator signal_operator(const DensityMatrix& rho_plus,
                               const DensityMatrix& rho_minus);

/// Statevector for the entangling circuit (handy for oracles and tests).
Statevector entangling_state(int n, double theta);

} // namespace qloc

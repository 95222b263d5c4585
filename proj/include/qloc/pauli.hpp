#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qloc/matrix.hpp"

namespace qloc {

/// Enumeration limits: full 4^n coefficient sweeps up to 6 qubits, k-local
/// enumeration up to 12 qubits with k <= 3.
inline constexpr int kFullSweepMaxQubits = 6;
inline constexpr int kLocalEnumMaxQubits = 12;
inline constexpr int kLocalEnumMaxK = 3;

/// An n-qubit tensor product of {I, X, Y, Z}, stored as two bit masks.
/// Bit q of x/z corresponds to qubit q; X = (1,0), Z = (0,1), Y = (1,1).
/// Text form puts qubit 0 leftmost, e.g. "XIIZ".
struct PauliString {
  int n = 0;
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  PauliString() = default;
  PauliString(int n_, std::uint32_t x_, std::uint32_t z_);

  static PauliString identity(int n) { return PauliString(n, 0, 0); }
  static PauliString from_text(const std::string& letters);

  std::string text() const;

  char letter(int qubit) const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n == b.n && a.x == b.x && a.z == b.z;
  }

  /// Canonical order: ascending weight, then lexicographic on (x, z).
  friend bool operator<(const PauliString& a, const PauliString& b);
};

/// Number of non-identity tensor factors.
int weight(const PauliString& p);

/// All Pauli strings with 1 <= weight <= k in canonical order. The identity
/// is excluded: its coefficient vanishes for any traceless operator.
std::vector<PauliString> enumerate_k_local(int n, int k);

/// All 4^n strings (identity included) in canonical order; n <= 6.
std::vector<PauliString> enumerate_all(int n);

/// Dense 2^n x 2^n realization as a tensor product of single-qubit matrices.
ComplexMatrix realize_matrix(const PauliString& p);

/// Tr(P * A) without realizing P: a Pauli matrix has one nonzero entry per
/// row, so the trace reduces to a single masked sweep over A.
Cd pauli_trace(const PauliString& p, const ComplexMatrix& a);

/// Real-valued Tr(P * A) for Hermitian A; throws NumericalError if the
/// imaginary residue exceeds 1e-10 instead of discarding it silently.
double pauli_trace_real(const PauliString& p, const ComplexMatrix& a);

/// c_P = 2^{-n} Tr(P * A) for Hermitian A.
double pauli_coefficient(const PauliString& p, const ComplexMatrix& a);

/// Weight-resolved magnitude spectrum W_l = sum_{w(P)=l} |c_P|.
struct WeightSpectrum {
  std::vector<double> values;  // index l = 0..n
};

WeightSpectrum weight_spectrum(const ComplexMatrix& a);

} // namespace qloc

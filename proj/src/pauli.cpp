#include "qloc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qloc/errors.hpp"

namespace qloc {

namespace {

// Map a qubit-indexed mask (bit q = qubit q) to index-bit space, where qubit
// 0 owns the most significant bit of a basis-state index.
std::uint32_t to_index_mask(std::uint32_t mask, int n) {
  std::uint32_t out = 0;
  for (int q = 0; q < n; ++q) {
    if (mask & (1u << q)) out |= 1u << (n - 1 - q);
  }
  return out;
}

const ComplexMatrix& single_qubit_matrix(char letter) {
  static const ComplexMatrix kI = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 1.0}});
  static const ComplexMatrix kX = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  static const ComplexMatrix kY =
      ComplexMatrix::from_rows({{0.0, Cd(0.0, -1.0)}, {Cd(0.0, 1.0), 0.0}});
  static const ComplexMatrix kZ = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  switch (letter) {
    case 'I': return kI;
    case 'X': return kX;
    case 'Y': return kY;
    case 'Z': return kZ;
  }
  throw std::invalid_argument(std::string("unknown Pauli letter: ") + letter);
}

} // namespace

PauliString::PauliString(int n_, std::uint32_t x_, std::uint32_t z_)
    : n(n_), x(x_), z(z_) {
  if (n < 1 || n > kLocalEnumMaxQubits) {
    throw std::invalid_argument("PauliString: qubit count out of range");
  }
  const std::uint32_t hi = ~((1u << n) - 1u);
  if ((x & hi) || (z & hi)) {
    throw std::invalid_argument("PauliString: mask bits beyond qubit count");
  }
}

PauliString PauliString::from_text(const std::string& letters) {
  const int n = static_cast<int>(letters.size());
  PauliString p(n, 0, 0);
  for (int q = 0; q < n; ++q) {
    switch (letters[q]) {
      case 'I': break;
      case 'X': p.x |= 1u << q; break;
      case 'Z': p.z |= 1u << q; break;
      case 'Y': p.x |= 1u << q; p.z |= 1u << q; break;
      default:
        throw std::invalid_argument("PauliString: bad letter in \"" + letters + "\"");
    }
  }
  return p;
}

char PauliString::letter(int qubit) const {
  const bool xb = x & (1u << qubit);
  const bool zb = z & (1u << qubit);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::string PauliString::text() const {
  std::string s(static_cast<std::size_t>(n), 'I');
  for (int q = 0; q < n; ++q) s[q] = letter(q);
  return s;
}

bool operator<(const PauliString& a, const PauliString& b) {
  const int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  if (a.x != b.x) return a.x < b.x;
  return a.z < b.z;
}

int weight(const PauliString& p) {
  return std::popcount(p.x | p.z);
}

std::vector<PauliString> enumerate_k_local(int n, int k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("enumerate_k_local: k must satisfy 1 <= k <= n");
  }
  if (n > kFullSweepMaxQubits && (n > kLocalEnumMaxQubits || k > kLocalEnumMaxK)) {
    throw std::invalid_argument("enumerate_k_local: (n, k) beyond enumeration limit");
  }

  std::vector<PauliString> out;
  // Support subsets of size l, three letter choices per supported qubit.
  std::vector<int> pos;
  for (int l = 1; l <= k; ++l) {
    pos.assign(static_cast<std::size_t>(l), 0);
    for (int i = 0; i < l; ++i) pos[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint32_t letters_count = 1;
      for (int i = 0; i < l; ++i) letters_count *= 3;
      for (std::uint32_t a = 0; a < letters_count; ++a) {
        std::uint32_t x = 0, z = 0, rest = a;
        for (int i = 0; i < l; ++i) {
          const std::uint32_t bit = 1u << pos[static_cast<std::size_t>(i)];
          switch (rest % 3) {
            case 0: x |= bit; break;           // X
            case 1: x |= bit; z |= bit; break; // Y
            case 2: z |= bit; break;           // Z
          }
          rest /= 3;
        }
        out.emplace_back(n, x, z);
      }
      // next combination
      int i = l - 1;
      while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - l + i) --i;
      if (i < 0) break;
      ++pos[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < l; ++j)
        pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PauliString> enumerate_all(int n) {
  if (n < 1 || n > kFullSweepMaxQubits) {
    throw std::invalid_argument("enumerate_all: n beyond full-sweep limit");
  }
  std::vector<PauliString> out;
  out.reserve(std::size_t{1} << (2 * n));
  const std::uint32_t top = 1u << n;
  for (std::uint32_t x = 0; x < top; ++x)
    for (std::uint32_t z = 0; z < top; ++z) out.emplace_back(n, x, z);
  std::sort(out.begin(), out.end());
  return out;
}

ComplexMatrix realize_matrix(const PauliString& p) {
  if ((std::size_t{1} << p.n) > kMaxDim) {
    throw std::invalid_argument("realize_matrix: dimension exceeds limit");
  }
  ComplexMatrix m = single_qubit_matrix(p.letter(0));
  for (int q = 1; q < p.n; ++q) m = kron(m, single_qubit_matrix(p.letter(q)));
  return m;
}

Cd pauli_trace(const PauliString& p, const ComplexMatrix& a) {
  const std::size_t dim = std::size_t{1} << p.n;
  if (a.dim() != dim) throw std::invalid_argument("pauli_trace: dim mismatch");

  const std::uint32_t xm = to_index_mask(p.x, p.n);
  const std::uint32_t zm = to_index_mask(p.z, p.n);
  const int ny = std::popcount(p.x & p.z);

  // Tr(P A) = i^{#Y} * sum_c (-1)^{parity(c & zm)} A[c][c ^ xm]
  Cd acc = 0.0;
  for (std::size_t c = 0; c < dim; ++c) {
    const Cd v = a(c, c ^ xm);
    if (std::popcount(static_cast<std::uint32_t>(c) & zm) & 1) acc -= v;
    else acc += v;
  }
  static const Cd kIPow[4] = {Cd(1, 0), Cd(0, 1), Cd(-1, 0), Cd(0, -1)};
  return kIPow[ny % 4] * acc;
}

double pauli_trace_real(const PauliString& p, const ComplexMatrix& a) {
  const Cd t = pauli_trace(p, a);
  if (std::abs(t.imag()) >= 1e-10) {
    throw NumericalError("pauli_trace_real: imaginary residue " +
                         std::to_string(t.imag()) + " on " + p.text());
  }
  return t.real();
}

double pauli_coefficient(const PauliString& p, const ComplexMatrix& a) {
  require_hermitian(a, 1e-9);
  return std::ldexp(pauli_trace_real(p, a), -p.n);
}

WeightSpectrum weight_spectrum(const ComplexMatrix& a) {
  require_hermitian(a, 1e-9);
  const int n = qubit_count_for_dim(a.dim());
  if (n > kFullSweepMaxQubits) {
    throw std::invalid_argument("weight_spectrum: n beyond full-sweep limit");
  }

  const auto strings = enumerate_all(n);
  std::vector<Cd> traces(strings.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(strings.size()); ++i) {
    traces[static_cast<std::size_t>(i)] =
        pauli_trace(strings[static_cast<std::size_t>(i)], a);
  }

  WeightSpectrum w;
  w.values.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (std::abs(traces[i].imag()) >= 1e-10) {
      throw NumericalError("weight_spectrum: imaginary residue on " +
                           strings[i].text());
    }
    w.values[static_cast<std::size_t>(weight(strings[i]))] +=
        std::abs(std::ldexp(traces[i].real(), -n));
  }
  return w;
}

} // namespace qloc

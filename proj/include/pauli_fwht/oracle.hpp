#pragma once

// Brute-force reference implementations. They build Pauli strings from
// explicit 2x2 matrices and evaluate traces directly, sharing no code path
// with the transform kernels. Test infrastructure, not a fast path.

#include <array>
#include <complex>
#include <cstddef>
#include <string>

#include "bits.hpp"
#include "error.hpp"
#include "matrix.hpp"

namespace pauli_fwht::oracle {

/// Largest n accepted by naive_decompose (O(n 8^n) work).
inline constexpr unsigned kMaxOracleQubits = 8;

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Single-qubit factor for bits (x, z): I, X, Z, or Y = i * X * Z.
inline const Matrix2& single_qubit(bool x, bool z) {
  static const std::array<Matrix2, 4> table = {{
      {{{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{1, 0}}}},    // I
      {{{Complex{0, 0}, Complex{1, 0}}, {Complex{1, 0}, Complex{0, 0}}}},    // X
      {{{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{-1, 0}}}},   // Z
      {{{Complex{0, 0}, Complex{0, -1}}, {Complex{0, 1}, Complex{0, 0}}}},   // Y
  }};
  return table[(x ? 1 : 0) | (z ? 2 : 0)];
}

/// Dense P_{r,s} as a Kronecker product, qubit n-1 as the leftmost factor.
inline ComplexMatrix materialize(BitIndex r, BitIndex s, unsigned n) {
  check_qubits(n);
  ComplexMatrix acc(0u);
  acc(0, 0) = 1.0;
  for (unsigned j = n; j-- > 0;) {
    const Matrix2& f = single_qubit((r >> j) & 1u, (s >> j) & 1u);
    ComplexMatrix next(acc.qubits() + 1);
    const std::size_t d = acc.dim();
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q)
        for (std::size_t k = 0; k < 2; ++k)
          for (std::size_t l = 0; l < 2; ++l) next(2 * p + k, 2 * q + l) = acc(p, q) * f[k][l];
    acc = std::move(next);
  }
  return acc;
}

/// tr(P_{r,s} A) / 2^n. P_{r,s} has exactly one nonzero per row, at column
/// p ^ r, whose value is the product of the per-qubit 2x2 entries.
inline Complex trace_coefficient(const ComplexMatrix& a, BitIndex r, BitIndex s) {
  const unsigned n = a.qubits();
  const std::size_t dim = a.dim();
  Complex sum{};
  for (std::size_t p = 0; p < dim; ++p) {
    const std::size_t c = p ^ r;
    Complex entry{1, 0};
    for (unsigned j = 0; j < n; ++j) {
      entry *= single_qubit((r >> j) & 1u, (s >> j) & 1u)[(p >> j) & 1u][(c >> j) & 1u];
    }
    sum += entry * a(c, p);
  }
  return sum / static_cast<double>(dim);
}

/// All 4^n coefficients through trace_coefficient.
inline CoefficientMatrix naive_decompose(const ComplexMatrix& a) {
  if (a.qubits() > kMaxOracleQubits) {
    throw LimitError("naive decomposition refuses n = " + std::to_string(a.qubits()) +
                     " (cap is " + std::to_string(kMaxOracleQubits) + ")");
  }
  CoefficientMatrix out(a.qubits());
  const std::size_t dim = a.dim();
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t s = 0; s < dim; ++s)
      out(r, s) = trace_coefficient(a, static_cast<BitIndex>(r), static_cast<BitIndex>(s));
  return out;
}

}  // namespace pauli_fwht::oracle

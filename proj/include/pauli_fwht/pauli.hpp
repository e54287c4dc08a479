#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "matrix.hpp"

namespace pauli_fwht {

/// Letter for one qubit given its (x, z) bits: (0,0)->I, (1,0)->X, (0,1)->Z,
/// (1,1)->Y. The (1,1) case is XZ = -iY with the i folded into the string.
constexpr char pauli_letter(bool x, bool z) noexcept {
  constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
  return table[(x ? 1 : 0) | (z ? 2 : 0)];
}

/// Label of the string with X-bits r and Z-bits s on n qubits. The leftmost
/// character is qubit n-1.
inline std::string label_of(BitIndex r, BitIndex s, unsigned n) {
  std::string label(n, 'I');
  for (unsigned j = 0; j < n; ++j) {
    label[n - 1 - j] = pauli_letter((r >> j) & 1u, (s >> j) & 1u);
  }
  return label;
}

struct ParsedLabel {
  BitIndex r = 0;
  BitIndex s = 0;
  unsigned n = 0;

  friend bool operator==(const ParsedLabel&, const ParsedLabel&) = default;
};

/// Inverse of label_of. The empty label is the n = 0 string (the scalar 1).
inline ParsedLabel parse_label(std::string_view label) {
  if (label.size() > kMaxQubits) {
    throw ParseError("label '" + std::string(label) + "' has more than " +
                     std::to_string(kMaxQubits) + " qubits");
  }
  ParsedLabel out;
  out.n = static_cast<unsigned>(label.size());
  for (std::size_t k = 0; k < label.size(); ++k) {
    const BitIndex bit = BitIndex{1} << (out.n - 1 - k);
    switch (label[k]) {
      case 'I': break;
      case 'X': out.r |= bit; break;
      case 'Z': out.s |= bit; break;
      case 'Y': out.r |= bit; out.s |= bit; break;
      default:
        throw ParseError("invalid Pauli letter '" + std::string(1, label[k]) + "' at position " +
                         std::to_string(k + 1) + " of label '" + std::string(label) + "'");
    }
  }
  return out;
}

/// coeff * P_{r,s}, where P_{r,s} is a plain tensor product of I/X/Y/Z.
struct PauliTerm {
  BitIndex r = 0;
  BitIndex s = 0;
  Complex coeff{};
  unsigned n = 0;

  std::string label() const { return label_of(r, s, n); }

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// x/z bit vectors plus a power of i. Terms produced here always carry
/// phase_exponent 0.
struct SymplecticRep {
  BitIndex x_bits = 0;
  BitIndex z_bits = 0;
  unsigned phase_exponent = 0;

  friend bool operator==(const SymplecticRep&, const SymplecticRep&) = default;
};

constexpr SymplecticRep symplectic_of(const PauliTerm& term) noexcept {
  return {term.r, term.s, 0};
}

/// Terms with |coeff| > threshold, strictly ascending in (r, s).
struct TermList {
  unsigned n = 0;
  std::vector<PauliTerm> terms;
  double threshold = 0.0;

  std::size_t size() const noexcept { return terms.size(); }
  bool empty() const noexcept { return terms.empty(); }

  /// Equality covers the qubit count and the terms. The threshold is a record
  /// of how the list was filtered, not part of its content.
  friend bool operator==(const TermList& a, const TermList& b) {
    return a.n == b.n && a.terms == b.terms;
  }
};

/// Sparse view of a coefficient matrix. Row-major traversal is already
/// (r, s)-lexicographic.
inline TermList terms_from_coefficients(const CoefficientMatrix& c, double threshold) {
  if (!(threshold >= 0.0)) throw Error("threshold must be non-negative");
  TermList out;
  out.n = c.qubits();
  out.threshold = threshold;
  const std::size_t dim = c.dim();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = 0; s < dim; ++s) {
      const Complex v = c(r, s);
      if (std::abs(v) > threshold) {
        out.terms.push_back({static_cast<BitIndex>(r), static_cast<BitIndex>(s), v, out.n});
      }
    }
  }
  return out;
}

/// Dense coefficient matrix holding the terms; absent entries are zero.
/// Throws on out-of-range or duplicate (r, s).
inline CoefficientMatrix coefficients_from_terms(const TermList& list) {
  CoefficientMatrix c(list.n);
  std::vector<bool> seen(c.size(), false);
  for (const PauliTerm& t : list.terms) {
    if (t.r >= c.dim() || t.s >= c.dim()) {
      throw DimensionError("term (" + std::to_string(t.r) + "," + std::to_string(t.s) +
                           ") out of range for " + std::to_string(list.n) + " qubits");
    }
    const std::size_t k = std::size_t{t.r} * c.dim() + t.s;
    if (seen[k]) {
      throw Error("duplicate term (" + std::to_string(t.r) + "," + std::to_string(t.s) + ")");
    }
    seen[k] = true;
    c.data()[k] = t.coeff;
  }
  return c;
}

}  // namespace pauli_fwht

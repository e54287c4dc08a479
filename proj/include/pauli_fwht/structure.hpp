#pragma once

// Symmetry classes of A and the coefficient structure each one forces:
//   Hermitian             -> every coefficient is real
//   complex symmetric     -> coefficient (r, s) vanishes when |r & s| is odd
//   real symmetric        -> both of the above
// The vanishing positions are exactly the -1 entries of H^{(x)n}, of which
// there are 2^{n-1} (2^n - 1).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "matrix.hpp"

namespace pauli_fwht {

inline constexpr double kDefaultStructureTolerance = 1e-12;

enum class SymmetryClass { real_symmetric, hermitian, complex_symmetric, general };

constexpr std::string_view to_string(SymmetryClass c) noexcept {
  switch (c) {
    case SymmetryClass::real_symmetric: return "real_symmetric";
    case SymmetryClass::hermitian: return "hermitian";
    case SymmetryClass::complex_symmetric: return "complex_symmetric";
    case SymmetryClass::general: return "general";
  }
  return "general";
}

/// Outcome of classify: the most specific class plus the tolerance and size it
/// was established for.
struct Classification {
  SymmetryClass kind = SymmetryClass::general;
  double tolerance = kDefaultStructureTolerance;
  unsigned n = 0;
};

inline Classification classify(const ComplexMatrix& a, double tol = kDefaultStructureTolerance) {
  if (!(tol >= 0.0)) throw Error("tolerance must be non-negative");
  double herm_dev = 0.0;
  double sym_dev = 0.0;
  double imag_max = 0.0;
  const std::size_t dim = a.dim();
  for (std::size_t p = 0; p < dim; ++p) {
    for (std::size_t q = 0; q < dim; ++q) {
      herm_dev = std::max(herm_dev, std::abs(a(p, q) - std::conj(a(q, p))));
      sym_dev = std::max(sym_dev, std::abs(a(p, q) - a(q, p)));
      imag_max = std::max(imag_max, std::abs(a(p, q).imag()));
    }
  }
  const bool symmetric = sym_dev <= tol;
  SymmetryClass kind = SymmetryClass::general;
  if (symmetric && imag_max <= tol) {
    kind = SymmetryClass::real_symmetric;
  } else if (herm_dev <= tol) {
    kind = SymmetryClass::hermitian;
  } else if (symmetric) {
    kind = SymmetryClass::complex_symmetric;
  }
  return {kind, tol, a.qubits()};
}

/// True when symmetric inputs force coefficient (r, s) to zero.
constexpr bool is_forbidden(BitIndex r, BitIndex s) noexcept { return parity_of_and(r, s) == 1; }

/// 2^{n-1} (2^n - 1).
constexpr std::uint64_t forbidden_count(unsigned n) noexcept {
  return n == 0 ? 0 : (std::uint64_t{1} << (n - 1)) * ((std::uint64_t{1} << n) - 1);
}

/// Every (r, s) with |r & s| odd, in (r, s) order.
inline std::vector<std::pair<BitIndex, BitIndex>> forbidden_positions(unsigned n) {
  check_qubits(n);
  std::vector<std::pair<BitIndex, BitIndex>> out;
  out.reserve(forbidden_count(n));
  const BitIndex dim = BitIndex{1} << n;
  for (BitIndex r = 0; r < dim; ++r)
    for (BitIndex s = 0; s < dim; ++s)
      if (is_forbidden(r, s)) out.emplace_back(r, s);
  return out;
}

struct StructureReport {
  SymmetryClass kind = SymmetryClass::general;
  /// max |Im alpha| over all coefficients.
  double max_imag_coeff = 0.0;
  /// max |alpha| over the forbidden positions.
  double max_forbidden_coeff = 0.0;
  /// Forbidden positions whose |alpha| <= tol.
  std::uint64_t zero_pattern_count = 0;
  /// 2^{n-1} (2^n - 1) for symmetric classes, otherwise 0.
  std::uint64_t expected_zero_count = 0;
  bool passed = true;
};

/// Measures the structure the class guarantees. Throws DimensionError if the
/// classification was made for a different size.
inline StructureReport check_structure(const CoefficientMatrix& c, const Classification& cls,
                                       double tol = kDefaultStructureTolerance) {
  if (cls.n != c.qubits()) {
    throw DimensionError("classification is for " + std::to_string(cls.n) +
                         " qubits but the coefficient matrix has " + std::to_string(c.qubits()));
  }
  if (!(tol >= 0.0)) throw Error("tolerance must be non-negative");

  StructureReport rep;
  rep.kind = cls.kind;
  const std::size_t dim = c.dim();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = 0; s < dim; ++s) {
      const Complex v = c(r, s);
      rep.max_imag_coeff = std::max(rep.max_imag_coeff, std::abs(v.imag()));
      if (is_forbidden(static_cast<BitIndex>(r), static_cast<BitIndex>(s))) {
        rep.max_forbidden_coeff = std::max(rep.max_forbidden_coeff, std::abs(v));
        if (std::abs(v) <= tol) ++rep.zero_pattern_count;
      }
    }
  }

  const bool needs_real =
      cls.kind == SymmetryClass::hermitian || cls.kind == SymmetryClass::real_symmetric;
  const bool needs_zeros =
      cls.kind == SymmetryClass::complex_symmetric || cls.kind == SymmetryClass::real_symmetric;
  if (needs_zeros) rep.expected_zero_count = forbidden_count(c.qubits());
  rep.passed = (!needs_real || rep.max_imag_coeff <= tol) &&
               (!needs_zeros || rep.max_forbidden_coeff <= tol);
  return rep;
}

}  // namespace pauli_fwht

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace pauli_fwht {

using Complex = std::complex<double>;

/// Throws DimensionError unless n <= kMaxQubits.
inline void check_qubits(unsigned n) {
  if (n > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n) + " exceeds the supported maximum of " +
                         std::to_string(kMaxQubits));
  }
}

/// Number of entries (4^n) of a 2^n x 2^n matrix.
constexpr std::size_t entry_count(unsigned n) noexcept { return std::size_t{1} << (2 * n); }

/// Validates that a flat row-major buffer holds exactly 4^n entries.
inline void check_buffer(std::size_t size, unsigned n) {
  check_qubits(n);
  if (size != entry_count(n)) {
    throw DimensionError("buffer holds " + std::to_string(size) + " entries, expected 4^" +
                         std::to_string(n) + " = " + std::to_string(entry_count(n)));
  }
}

/// Dense row-major 2^n x 2^n complex matrix. The Tag only distinguishes
/// operator matrices from coefficient matrices at the type level; both share
/// one layout and buffers move freely between them.
template <class Tag>
class SquareMatrix {
 public:
  SquareMatrix() : SquareMatrix(0u) {}

  /// Zero matrix on n qubits.
  explicit SquareMatrix(unsigned n) : n_(n) {
    check_qubits(n);
    data_.assign(entry_count(n), Complex{});
  }

  /// Takes ownership of a row-major buffer of exactly 4^n entries.
  SquareMatrix(unsigned n, std::vector<Complex> data) : n_(n), data_(std::move(data)) {
    check_buffer(data_.size(), n);
  }

  /// Zero matrix of dimension N; N must be a power of two.
  static SquareMatrix with_dimension(std::uint64_t dim) {
    if (!is_power_of_two(dim)) {
      throw DimensionError("matrix dimension " + std::to_string(dim) + " is not a power of two");
    }
    return SquareMatrix(log2_exact(dim));
  }

  unsigned qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return std::size_t{1} << n_; }
  std::size_t size() const noexcept { return data_.size(); }

  Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim() + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim() + col];
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  std::span<Complex> row(std::size_t r) noexcept { return data().subspan(r * dim(), dim()); }
  std::span<const Complex> row(std::size_t r) const noexcept {
    return data().subspan(r * dim(), dim());
  }

  /// Moves the buffer out, leaving this matrix as the 1x1 zero matrix.
  std::vector<Complex> release() && {
    std::vector<Complex> out = std::move(data_);
    n_ = 0;
    data_.assign(1, Complex{});
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  unsigned n_;
  std::vector<Complex> data_;
};

struct OperatorTag;
struct CoefficientTag;

/// Matrix A with entries a_{p,q}.
using ComplexMatrix = SquareMatrix<OperatorTag>;
/// Pauli coefficients: entry (r, s) is the weight of the string with X-bits r
/// and Z-bits s.
using CoefficientMatrix = SquareMatrix<CoefficientTag>;

/// Reinterprets a matrix's buffer under another tag without copying.
template <class To, class From>
SquareMatrix<To> retag(SquareMatrix<From>&& m) {
  const unsigned n = m.qubits();
  return SquareMatrix<To>(n, std::move(m).release());
}

/// Largest entry magnitude.
template <class Tag>
double max_abs(const SquareMatrix<Tag>& m) {
  double best = 0.0;
  for (const Complex& z : m.data()) best = std::max(best, std::abs(z));
  return best;
}

/// Largest entrywise |a - b|. Sizes must match.
template <class TagA, class TagB>
double max_abs_diff(const SquareMatrix<TagA>& a, const SquareMatrix<TagB>& b) {
  if (a.qubits() != b.qubits()) throw DimensionError("matrix size mismatch");
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) best = std::max(best, std::abs(a.data()[k] - b.data()[k]));
  return best;
}

}  // namespace pauli_fwht

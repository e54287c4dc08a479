#pragma once

// Pauli decomposition of a dense 2^n x 2^n matrix in three in-place phases:
//
//   1. XOR permutation   a[r][q] <- a[r ^ q][q]
//   2. row-wise FWHT     a[r][.] <- a[r][.] * H^{(x)n}
//   3. prefactors        a[r][s] <- a[r][s] * (-i)^{|r & s|} / 2^n
//
// after which entry (r, s) holds the coefficient of the Pauli string with
// X-bits r and Z-bits s. Reconstruction runs the phases backwards. Phase 1 is
// an involution and H^{(x)n} squares to 2^n I, so the inverse needs the same
// kernels plus a different elementwise factor.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "detail/parallel.hpp"
#include "matrix.hpp"
#include "pauli.hpp"

namespace pauli_fwht {

/// Arithmetic performed by the kernels, counted as it is executed.
struct OpCounters {
  std::uint64_t swaps = 0;
  std::uint64_t complex_adds = 0;
  std::uint64_t complex_subs = 0;
  std::uint64_t complex_muls = 0;

  OpCounters& operator+=(const OpCounters& o) noexcept {
    swaps += o.swaps;
    complex_adds += o.complex_adds;
    complex_subs += o.complex_subs;
    complex_muls += o.complex_muls;
    return *this;
  }

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

/// Closed-form counts for one decomposition on n qubits.
constexpr std::uint64_t expected_swaps(unsigned n) noexcept {
  return n == 0 ? 0 : (std::uint64_t{1} << (n - 1)) * ((std::uint64_t{1} << n) - 1);
}
constexpr std::uint64_t expected_adds_plus_subs(unsigned n) noexcept {
  return std::uint64_t{n} << (2 * n);
}

namespace detail {

// Tile edge for the blocked XOR permutation. Tile (rb, qb) only exchanges
// entries with tile (rb ^ qb, qb), so both tiles stay cache resident.
inline constexpr std::size_t kXorTile = 32;

template <class Kernel>
void run_with_counters(std::size_t count, unsigned threads, OpCounters* counters, Kernel&& kernel) {
  std::vector<OpCounters> local(std::max(1u, threads));
  parallel_chunks(count, threads, [&](std::size_t begin, std::size_t end, unsigned worker) {
    kernel(begin, end, local[worker]);
  });
  if (counters) {
    for (const OpCounters& c : local) *counters += c;
  }
}

// Per-phase factors for multiplying by i^k * scale: odd k exchanges the
// components, then each is multiplied by +-scale. With scale a power of two
// every product is exact.
struct PhaseTable {
  double re_sign[4];
  double im_sign[4];
};

inline PhaseTable make_phase_table(double scale) noexcept {
  // i^k (a + bi): k=0 (a, b), k=1 (-b, a), k=2 (-a, -b), k=3 (b, -a).
  return {{scale, -scale, -scale, scale}, {scale, scale, -scale, -scale}};
}

// In-place unnormalised Walsh-Hadamard transform of one row stored as
// interleaved (re, im) doubles. Stages run h = 1, 2, ..., N/2 in order.
inline std::uint64_t fwht_row(double* v, std::size_t dim) noexcept {
  std::uint64_t butterflies = 0;
  for (std::size_t h = 1; h < dim; h *= 2) {
    for (std::size_t i = 0; i < dim; i += 2 * h) {
      double* lo = v + 2 * i;
      double* hi = lo + 2 * h;
      for (std::size_t k = 0; k < 2 * h; ++k) {
        const double x = lo[k];
        const double y = hi[k];
        lo[k] = x + y;
        hi[k] = x - y;
      }
      butterflies += h;
    }
  }
  return butterflies;
}

// Entry (r, s) <- entry * i^{direction * |r & s|} * scale.
inline void scale_by_phase(std::span<Complex> data, unsigned n, int direction, double scale,
                           OpCounters* counters, unsigned threads) {
  const std::size_t dim = std::size_t{1} << n;
  const PhaseTable table = make_phase_table(scale);
  // (-i)^k == i^{3k}.
  const unsigned exponent_mult = direction < 0 ? 3u : 1u;
  double* base = reinterpret_cast<double*>(data.data());
  run_with_counters(dim, threads, counters, [&](std::size_t begin, std::size_t end, OpCounters& c) {
    for (std::size_t r = begin; r < end; ++r) {
      double* row = base + 2 * r * dim;
      for (std::size_t s = 0; s < dim; ++s) {
        const unsigned k = (hamming_weight(static_cast<BitIndex>(r & s)) * exponent_mult) & 3u;
        const double re = row[2 * s];
        const double im = row[2 * s + 1];
        const bool odd = k & 1u;
        // + 0.0 turns a -0 result into +0 and leaves every other value alone.
        row[2 * s] = (odd ? im : re) * table.re_sign[k] + 0.0;
        row[2 * s + 1] = (odd ? re : im) * table.im_sign[k] + 0.0;
      }
      c.complex_muls += dim;
    }
  });
}

}  // namespace detail

/// Phase 1: a[r][q] <- a[r ^ q][q], as one swap per unordered pair. An
/// involution.
inline void xor_permute_in_place(std::span<Complex> data, unsigned n, OpCounters* counters = nullptr,
                                 unsigned threads = 1) {
  check_buffer(data.size(), n);
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t tile = std::min(dim, detail::kXorTile);
  const std::size_t tiles = dim / tile;
  Complex* a = data.data();

  // Columns are independent; workers split the column tiles.
  detail::run_with_counters(tiles, threads, counters, [&](std::size_t qb_begin, std::size_t qb_end,
                                                          OpCounters& c) {
    std::uint64_t swaps = 0;
    for (std::size_t qb = qb_begin; qb < qb_end; ++qb) {
      const std::size_t col0 = qb * tile;
      for (std::size_t rb = 0; rb < tiles; ++rb) {
        const std::size_t pb = rb ^ qb;
        if (qb != 0 && pb < rb) continue;
        for (std::size_t ri = 0; ri < tile; ++ri) {
          Complex* row = a + (rb * tile + ri) * dim + col0;
          for (std::size_t qi = 0; qi < tile; ++qi) {
            const std::size_t pi = ri ^ qi;
            // Inside a diagonal tile each pair is visited twice; take one.
            if (qb == 0 && pi <= ri) continue;
            std::swap(row[qi], a[(pb * tile + pi) * dim + col0 + qi]);
            ++swaps;
          }
        }
      }
    }
    c.swaps += swaps;
  });
}

/// Phase 2: every row v <- v * H^{(x)n}, using additions and subtractions
/// only. Rows are independent; the butterfly order inside a row is fixed, so
/// results do not depend on the worker count.
inline void fwht_rows_in_place(std::span<Complex> data, unsigned n, OpCounters* counters = nullptr,
                               unsigned threads = 1) {
  check_buffer(data.size(), n);
  const std::size_t dim = std::size_t{1} << n;
  // std::complex<double> is layout-compatible with double[2].
  double* base = reinterpret_cast<double*>(data.data());
  detail::run_with_counters(dim, threads, counters, [&](std::size_t begin, std::size_t end,
                                                        OpCounters& c) {
    std::uint64_t butterflies = 0;
    for (std::size_t r = begin; r < end; ++r) butterflies += detail::fwht_row(base + 2 * r * dim, dim);
    c.complex_adds += butterflies;
    c.complex_subs += butterflies;
  });
}

/// Phase 3: entry (r, s) <- entry * (-i)^{|r & s|} / 2^n. Exact: the phase is
/// a component shuffle and the scale a power of two.
inline void apply_prefactors_in_place(std::span<Complex> data, unsigned n,
                                      OpCounters* counters = nullptr, unsigned threads = 1) {
  check_buffer(data.size(), n);
  detail::scale_by_phase(data, n, -1, std::ldexp(1.0, -static_cast<int>(n)), counters, threads);
}

/// Inverse of phase 3 fused with the 2^-n that undoes the second FWHT:
/// entry (r, s) <- entry * i^{|r & s|}.
inline void undo_prefactors_in_place(std::span<Complex> data, unsigned n,
                                     OpCounters* counters = nullptr, unsigned threads = 1) {
  check_buffer(data.size(), n);
  detail::scale_by_phase(data, n, +1, 1.0, counters, threads);
}

/// Overwrites a row-major 2^n x 2^n buffer with its Pauli coefficients. The
/// buffer is validated before it is touched.
inline void decompose_in_place(std::span<Complex> data, unsigned n, OpCounters* counters = nullptr,
                               unsigned threads = 1) {
  check_buffer(data.size(), n);
  xor_permute_in_place(data, n, counters, threads);
  fwht_rows_in_place(data, n, counters, threads);
  apply_prefactors_in_place(data, n, counters, threads);
}

/// Overwrites a buffer of Pauli coefficients with the matrix they sum to.
inline void reconstruct_in_place(std::span<Complex> data, unsigned n, OpCounters* counters = nullptr,
                                 unsigned threads = 1) {
  check_buffer(data.size(), n);
  undo_prefactors_in_place(data, n, counters, threads);
  fwht_rows_in_place(data, n, counters, threads);
  xor_permute_in_place(data, n, counters, threads);
}

/// Consumes A and returns its coefficients in the same storage.
inline CoefficientMatrix decompose(ComplexMatrix&& a, OpCounters* counters = nullptr,
                                   unsigned threads = 1) {
  decompose_in_place(a.data(), a.qubits(), counters, threads);
  return retag<CoefficientTag>(std::move(a));
}

/// Consumes C and returns the matrix it decomposes, in the same storage.
inline ComplexMatrix reconstruct(CoefficientMatrix&& c, OpCounters* counters = nullptr,
                                 unsigned threads = 1) {
  reconstruct_in_place(c.data(), c.qubits(), counters, threads);
  return retag<OperatorTag>(std::move(c));
}

/// Terms with |alpha| > threshold in (r, s) order. Consumes A.
inline TermList decompose_to_terms(ComplexMatrix&& a, double threshold, unsigned threads = 1) {
  if (!(threshold >= 0.0)) throw Error("threshold must be non-negative");
  return terms_from_coefficients(decompose(std::move(a), nullptr, threads), threshold);
}

inline ComplexMatrix reconstruct(const TermList& terms, unsigned threads = 1) {
  return reconstruct(coefficients_from_terms(terms), nullptr, threads);
}

}  // namespace pauli_fwht

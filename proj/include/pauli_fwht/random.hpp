#pragma once

// Reproducible test and benchmark inputs.
//
// The generator is xoshiro256** (Blackman and Vigna) with its state filled by
// SplitMix64 from a 64-bit seed. Both are fully specified here, so a seed
// yields the same matrices on every platform and standard library.

#include <array>
#include <bit>
#include <cstdint>

#include "matrix.hpp"

namespace pauli_fwht {

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256(std::uint64_t seed) noexcept {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform01() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [-1, 1).
  constexpr double uniform_pm1() noexcept { return 2.0 * uniform01() - 1.0; }

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// Entries with real and imaginary parts uniform on [-1, 1), drawn row-major,
/// real part first.
inline ComplexMatrix random_complex(unsigned n, std::uint64_t seed) {
  ComplexMatrix m(n);
  Xoshiro256 rng(seed);
  for (Complex& z : m.data()) {
    const double re = rng.uniform_pm1();
    const double im = rng.uniform_pm1();
    z = {re, im};
  }
  return m;
}

/// (B + B^dagger) / 2 for B = random_complex(n, seed). Exactly Hermitian.
inline ComplexMatrix random_hermitian(unsigned n, std::uint64_t seed) {
  const ComplexMatrix b = random_complex(n, seed);
  ComplexMatrix out(n);
  const std::size_t dim = out.dim();
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) out(p, q) = (b(p, q) + std::conj(b(q, p))) * 0.5;
  return out;
}

/// (B + B^T) / 2 for B = random_complex(n, seed). Exactly symmetric.
inline ComplexMatrix random_complex_symmetric(unsigned n, std::uint64_t seed) {
  const ComplexMatrix b = random_complex(n, seed);
  ComplexMatrix out(n);
  const std::size_t dim = out.dim();
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) out(p, q) = (b(p, q) + b(q, p)) * 0.5;
  return out;
}

/// Real part of random_complex_symmetric.
inline ComplexMatrix random_real_symmetric(unsigned n, std::uint64_t seed) {
  ComplexMatrix out = random_complex_symmetric(n, seed);
  for (Complex& z : out.data()) z = {z.real(), 0.0};
  return out;
}

}  // namespace pauli_fwht

#pragma once

#include <bit>
#include <cstdint>

namespace pauli_fwht {

/// An n-bit index (row, column, or one half of a Pauli string's symplectic
/// pair). Bit j carries weight 2^j and corresponds to qubit j.
using BitIndex = std::uint32_t;

/// Largest supported qubit count. Indices fit in a BitIndex and 4^n entries
/// fit in a 64-bit size.
inline constexpr unsigned kMaxQubits = 16;

/// Portable population count (SWAR). Kept bit-exact with hamming_weight.
constexpr unsigned hamming_weight_portable(BitIndex x) noexcept {
  x = x - ((x >> 1) & 0x55555555u);
  x = (x & 0x33333333u) + ((x >> 2) & 0x33333333u);
  x = (x + (x >> 4)) & 0x0F0F0F0Fu;
  return static_cast<unsigned>((x * 0x01010101u) >> 24);
}

/// Number of set bits.
constexpr unsigned hamming_weight(BitIndex x) noexcept {
  return static_cast<unsigned>(std::popcount(x));
}

/// |r AND s| mod 2.
constexpr unsigned parity_of_and(BitIndex r, BitIndex s) noexcept {
  return hamming_weight(r & s) & 1u;
}

/// Entry (q, s) of the n-fold tensor power of H = [[1, 1], [1, -1]]:
/// (-1)^{|q AND s|}. Independent of n as long as q, s < 2^n.
constexpr int hadamard_entry(BitIndex q, BitIndex s) noexcept {
  return parity_of_and(q, s) ? -1 : 1;
}

constexpr bool is_power_of_two(std::uint64_t x) noexcept { return std::has_single_bit(x); }

/// log2 of a power of two.
constexpr unsigned log2_exact(std::uint64_t x) noexcept {
  return static_cast<unsigned>(std::countr_zero(x));
}

}  // namespace pauli_fwht

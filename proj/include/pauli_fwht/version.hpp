#pragma once

namespace pauli_fwht {

inline constexpr int kVersionMajor = 0;
inline constexpr int kVersionMinor = 1;
inline constexpr int kVersionPatch = 0;

constexpr const char* version() noexcept { return "0.1.0"; }

}  // namespace pauli_fwht

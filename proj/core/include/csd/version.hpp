#pragma once

namespace csd {

inline constexpr const char* kToolName = "csd-sim";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace csd

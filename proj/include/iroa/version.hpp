#pragma once

namespace iroa {

inline constexpr const char* kToolName = "iroa";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace iroa

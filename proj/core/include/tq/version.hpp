#pragma once

namespace tq {

inline constexpr const char* kToolName = "topoquandle";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace tq

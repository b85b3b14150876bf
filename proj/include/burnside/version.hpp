#pragma once

namespace burnside {

inline constexpr const char* kToolName = "burnside";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace burnside

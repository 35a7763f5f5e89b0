#pragma once

namespace atlas {

inline constexpr const char* kToolName = "atlas";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace atlas

#pragma once

namespace snip {

inline constexpr const char* kToolName = "snip";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace snip

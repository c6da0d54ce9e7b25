#pragma once

namespace qnr {

inline constexpr const char* kToolName = "qnr";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace qnr

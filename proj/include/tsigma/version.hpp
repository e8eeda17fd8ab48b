#pragma once

namespace tsigma {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "tsigma";

}  // namespace tsigma

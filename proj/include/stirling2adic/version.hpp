#pragma once

namespace s2a {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace s2a

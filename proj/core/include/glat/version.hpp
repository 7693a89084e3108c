#pragma once

namespace glat {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace glat

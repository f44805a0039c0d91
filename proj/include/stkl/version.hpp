#pragma once

namespace stkl {

inline constexpr const char* kToolVersion = "steinerkl 0.1.0";

}  // namespace stkl

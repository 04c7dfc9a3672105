#pragma once

namespace tcoulomb {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace tcoulomb

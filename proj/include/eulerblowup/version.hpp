#pragma once

namespace eb {
inline constexpr const char* kVersion = "0.1.0";
}  // namespace eb

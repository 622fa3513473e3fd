#pragma once

namespace harkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace harkit

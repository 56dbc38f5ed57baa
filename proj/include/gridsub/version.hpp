#pragma once

namespace gridsub {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gridsub

#pragma once

namespace plasmod {

inline constexpr const char* kVersionString = "plasmod 0.1.0";

}  // namespace plasmod

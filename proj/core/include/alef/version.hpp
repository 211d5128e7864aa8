#pragma once

#include <string_view>

namespace alef {

inline constexpr std::string_view kToolName = "alef";
inline constexpr std::string_view kToolVersion = "1.0.0";

}  // namespace alef

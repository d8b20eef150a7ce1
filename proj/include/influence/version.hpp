#pragma once

#include <string_view>

namespace influence {

inline constexpr std::string_view kToolName = "influence";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace influence

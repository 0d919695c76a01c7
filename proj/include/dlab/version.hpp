#pragma once

#include <string_view>

namespace dlab {

inline constexpr std::string_view kToolName = "dlab";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace dlab

#pragma once

namespace spheretrace {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spheretrace

#pragma once

namespace windsentry {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace windsentry

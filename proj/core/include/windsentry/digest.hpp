#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace windsentry {

// FNV-1a 64-bit. Not cryptographic; used only to tell whether two runs
// produced byte-identical artifacts.
std::uint64_t fnv1a64(std::string_view data);

// Digest as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view data);

}  // namespace windsentry

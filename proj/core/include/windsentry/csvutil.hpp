#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace windsentry {

/// Splits one line on commas. Fields are plain numbers/timestamps here, so
/// there is no quoting to handle.
std::vector<std::string_view> split_csv_line(std::string_view line);

/// Locale-independent numeric parsing; rejects trailing garbage, empty
/// fields, NaN and infinities.
std::optional<double> parse_double(std::string_view text);
std::optional<std::int64_t> parse_int(std::string_view text);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

/// Reads a whole text file into lines (without their terminators; a
/// trailing '\r' is stripped). Throws std::runtime_error if unreadable.
std::vector<std::string> read_lines(const std::string& path);

void write_text_file(const std::string& path, std::string_view content);
std::string read_text_file(const std::string& path);

}  // namespace windsentry

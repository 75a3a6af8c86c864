#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace windsentry {

/// Seconds per SCADA sampling step (10-minute averages).
inline constexpr std::int64_t kStepSeconds = 600;

/// Parses a strict "YYYY-MM-DDTHH:MM:SSZ" UTC instant into Unix seconds.
/// Returns nullopt for any other layout or out-of-range field.
std::optional<std::int64_t> parse_iso8601_utc(std::string_view text);

std::string format_iso8601_utc(std::int64_t unix_seconds);

/// True when the instant lies on the 10-minute grid (seconds 0, minutes
/// in {0,10,20,30,40,50}).
bool on_ten_minute_grid(std::int64_t unix_seconds);

/// Year and month (1..12) of a UTC instant, for calendar-month grouping.
struct YearMonth {
  int year = 0;
  int month = 0;
  friend bool operator==(const YearMonth&, const YearMonth&) = default;
  friend auto operator<=>(const YearMonth&, const YearMonth&) = default;
};

YearMonth year_month_utc(std::int64_t unix_seconds);

}  // namespace windsentry

#pragma once

#include <string>

#include "windsentry/monitor.hpp"

namespace windsentry {

// One row per present grid slot: timestamp,power_kw,expected_kw,
// rolling_residual_mwh,valid. The rolling column is empty when the
// trailing window lacks coverage (valid = 0).
std::string residuals_csv_text(const ResidualSeries& series);
void write_residuals_csv(const std::string& path,
                         const ResidualSeries& series);
ResidualSeries parse_residuals_csv(const std::string& path);

// Events plus the threshold and quantile used; timestamps ISO-8601.
std::string events_json_text(const EventDetection& detection);
void write_events_json(const std::string& path,
                       const EventDetection& detection);
EventDetection parse_events_json(const std::string& path);

}  // namespace windsentry

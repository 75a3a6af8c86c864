#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "windsentry/scada.hpp"

namespace windsentry {

inline constexpr const char* kScadaCsvHeader =
    "timestamp,wind_speed_mps,wind_dir_deg,air_temp_c,power_kw,"
    "pitch_angle_deg,hydraulic_pressure_bar,status_code";

struct RejectedRow {
  std::size_t line;  // 1-based line number in the file
  std::string reason;
  std::string raw;
};

struct ParseResult {
  std::vector<ScadaRecord> records;  // sorted, strictly increasing timestamps
  std::vector<RejectedRow> rejects;
};

// Parse the canonical SCADA CSV. Malformed rows land in rejects; structural
// problems throw std::runtime_error: missing file, header mismatch,
// duplicate timestamps, or more than half of the data rows rejected.
ParseResult parse_scada_csv(const std::string& path,
                            const TurbineConfig& config);
ParseResult parse_scada_text(const std::string& text,
                             const TurbineConfig& config,
                             const std::string& origin);

struct Gap {
  std::int64_t start;  // first missing grid timestamp
  std::size_t steps;   // number of consecutive missing steps
};

// Missing 10-minute grid points between the first and last record.
// Input must be sorted; empty or single-record input yields no gaps.
std::vector<Gap> find_gaps(const std::vector<ScadaRecord>& records);

std::string scada_csv_text(const std::vector<ScadaRecord>& records);
void write_scada_csv(const std::string& path,
                     const std::vector<ScadaRecord>& records);

// Reject report: line,reason,raw with the raw row quoted.
void write_rejects_csv(const std::string& path,
                       const std::vector<RejectedRow>& rejects);

}  // namespace windsentry

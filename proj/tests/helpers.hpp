#pragma once

#include <cstdint>
#include <vector>

#include "windsentry/scada.hpp"
#include "windsentry/timeparse.hpp"

namespace windsentry::testing {

inline constexpr std::int64_t kT0 = 1735689600;  // 2025-01-01T00:00:00Z

inline ScadaRecord make_record(std::size_t step, double speed, double power,
                               double dir = 180.0, double temp = 10.0,
                               int status = 0) {
  ScadaRecord r;
  r.timestamp = kT0 + static_cast<std::int64_t>(step) * kStepSeconds;
  r.wind_speed_mps = speed;
  r.wind_dir_deg = dir;
  r.air_temp_c = temp;
  r.power_kw = power;
  r.pitch_angle_deg = 0.0;
  r.status_code = status;
  return r;
}

inline std::vector<ScadaRecord> constant_series(std::size_t n, double speed,
                                                double power) {
  std::vector<ScadaRecord> records;
  records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    records.push_back(make_record(i, speed, power));
  }
  return records;
}

}  // namespace windsentry::testing

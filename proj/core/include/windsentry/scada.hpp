#pragma once

#include <cstdint>
#include <optional>

namespace windsentry {

// One 10-minute telemetry sample. Timestamps are UTC epoch seconds.
// status_code 0 means normal operation; anything else is a logged
// curtailment/maintenance state.
struct ScadaRecord {
  std::int64_t timestamp = 0;
  double wind_speed_mps = 0.0;
  double wind_dir_deg = 0.0;
  double air_temp_c = 0.0;
  double power_kw = 0.0;
  double pitch_angle_deg = 0.0;
  std::optional<double> hydraulic_pressure_bar;
  int status_code = 0;

  friend bool operator==(const ScadaRecord&, const ScadaRecord&) = default;
};

// Turbine ratings plus the knobs for cleaning and monitoring. Defaults
// describe a 3.3 MW machine.
struct TurbineConfig {
  double rated_power_kw = 3300.0;
  double cut_in_mps = 3.0;
  double cut_out_mps = 25.0;

  // Power-curve outlier filter.
  double bin_width_mps = 1.0;
  double quantile_lo = 0.05;
  double quantile_hi = 0.95;
  double outlier_margin = 0.5;  // in units of the inter-quantile distance
  int min_bin_count = 10;       // bins with fewer points get no band
  int status_exclusion_radius = 1;  // neighbors dropped around bad status

  // Rolling energy monitor.
  double horizon_hours = 24.0;
  double alert_quantile = 0.001;
  double merge_gap_hours = 1.0;
  double min_window_coverage = 0.9;

  double energy_price_per_mwh = 40.0;

  // Number of 10-minute steps in the monitoring horizon.
  int horizon_steps() const;

  // Throws std::invalid_argument when inconsistent.
  void validate() const;
};

}  // namespace windsentry

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "windsentry/scada.hpp"

namespace windsentry {

// Synthetic-year generator with a known power relation and injectable
// faults; serves as the oracle for pipeline tests.

struct WindPin {
  std::int64_t start = 0;  // half-open [start, end)
  std::int64_t end = 0;
  double speed_mps = 0.0;
};

struct WeatherParams {
  double weibull_shape = 2.1;
  double weibull_scale = 8.0;
  double autocorrelation = 0.97;  // AR(1) on the latent gaussian
  double direction_drift_deg = 1.0;   // per 10-min step
  double direction_sigma_deg = 4.0;
  double temp_mean_c = 11.0;
  double temp_seasonal_amp_c = 9.0;
  double temp_daily_amp_c = 3.0;
  double temp_noise_c = 0.6;
  std::vector<WindPin> wind_pins;  // hold wind speed constant in a window
};

struct SimTurbineParams {
  double cut_in_mps = 3.0;
  double rated_speed_mps = 12.0;
  double cut_out_mps = 25.0;
  double rated_power_kw = 3300.0;
  double consumption_kw = 20.0;  // standby draw below cut-in
};

struct DirectionDerate {
  double from_deg = 0.0;  // sector may wrap through north
  double to_deg = 0.0;
  double fraction = 0.0;
};

struct PowerParams {
  double noise_kw = 50.0;
  double temp_coeff_per_c = 0.003;  // air-density-style modulation
  double temp_ref_c = 11.0;
  std::vector<DirectionDerate> direction_derates;
};

struct ChannelParams {
  double pressure_mean_bar = 182.0;
  double pressure_noise_bar = 1.5;
  double pitch_noise_deg = 0.4;
  double pitch_rate_deg_per_mps = 3.0;  // above rated speed
};

enum class FaultKind { PitchMisalignment, HydraulicDrop, AnemometerBias, DataGap };

const char* fault_kind_name(FaultKind kind);
FaultKind fault_kind_from_name(const std::string& name);

// Faults alter the generated signals but leave status_code at 0; logged
// stops go through status_events instead.
struct FaultSpec {
  FaultKind kind = FaultKind::PitchMisalignment;
  std::int64_t start = 0;  // half-open [start, end)
  std::int64_t end = 0;
  double derate_fraction = 0.0;
  double pitch_offset_deg = 0.0;
  double pressure_drop_bar = 0.0;
  double bias_mps = 0.0;
};

struct StatusEvent {
  std::int64_t start = 0;  // half-open [start, end)
  std::int64_t end = 0;
  int code = 1;
};

struct Scenario {
  std::int64_t start_timestamp = 1735689600;  // 2025-01-01T00:00:00Z
  int duration_days = 365;
  std::uint64_t seed = 1;
  WeatherParams weather;
  SimTurbineParams turbine;
  PowerParams power;
  ChannelParams channels;
  std::vector<StatusEvent> status_events;
  std::vector<FaultSpec> faults;

  std::int64_t end_timestamp() const;
  void validate() const;  // throws std::invalid_argument
};

Scenario parse_scenario_json(const std::string& text,
                             const std::string& origin);
Scenario load_scenario(const std::string& path);
std::string scenario_json_text(const Scenario& scenario);

// Idealized curve: -consumption below cut-in, cubic ramp to rated at the
// rated speed, flat to cut-out, zero beyond.
double ground_truth_power(double v_mps, const SimTurbineParams& turbine);

struct TruthPoint {
  std::int64_t timestamp = 0;
  double true_expected_kw = 0.0;     // unfaulted capacity from weather
  double injected_deficit_kwh = 0.0; // (unfaulted - faulted) over the step
};

struct SimOutput {
  std::vector<ScadaRecord> records;  // data_gap windows omitted
  std::vector<TruthPoint> truth;     // full grid
};

SimOutput generate(const Scenario& scenario);

std::string truth_csv_text(const std::vector<TruthPoint>& truth);
void write_truth_csv(const std::string& path,
                     const std::vector<TruthPoint>& truth);
std::vector<TruthPoint> parse_truth_csv(const std::string& path);

}  // namespace windsentry

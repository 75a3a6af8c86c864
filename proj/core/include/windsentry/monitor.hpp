#pragma once

#include <cstdint>
#include <vector>

#include "windsentry/model.hpp"
#include "windsentry/scada.hpp"

namespace windsentry {

// One 10-minute grid slot of the monitored series. Slots without a record
// have present = false and contribute nothing to window sums. valid marks
// slots whose trailing window reached the required coverage.
struct ResidualPoint {
  std::int64_t timestamp = 0;
  bool present = false;
  double power_kw = 0.0;
  double expected_kw = 0.0;
  double step_energy_kwh = 0.0;
  double step_expected_kwh = 0.0;
  double rolling_residual_mwh = 0.0;
  bool valid = false;
};

struct ResidualSeries {
  std::vector<ResidualPoint> points;  // full grid, first to last record
  int horizon_steps = 0;
};

// Expected power per record under the model's feature set.
std::vector<double> predict_expected(const FittedModel& model,
                                     const std::vector<ScadaRecord>& records);

// Trailing-window energy residual in MWh. expected_kw is parallel to
// records. A window is valid when at least
// ceil(min_window_coverage * horizon_steps) slots are present.
ResidualSeries rolling_energy_residual(const std::vector<ScadaRecord>& records,
                                       const std::vector<double>& expected_kw,
                                       const TurbineConfig& config);

struct MetricVector {
  double m1 = 0.0;  // P - P_exp, kW
  double m2 = 0.0;  // |M1|
  double m3 = 0.0;  // relative deviation
  double m4 = 0.0;  // |M3|
  double m5 = 0.0;  // P / P_exp
  double m6 = 0.0;  // E / E_exp
  bool power_ratio_valid = false;  // |P_exp| >= 1 kW
  bool energy_ratio_valid = false; // |E_exp| >= 1 kWh
};

// Ratio metrics are NaN when flagged invalid; that is a data condition,
// not an error.
MetricVector compute_metrics(double p_kw, double p_exp_kw, double e_kwh,
                             double e_exp_kwh);

// Quantile-of-|residual| alert level: the magnitude exceeded by exactly
// alert_quantile of the samples. Throws std::runtime_error when fewer
// than 1/alert_quantile residuals are supplied.
double derive_threshold(const std::vector<double>& residuals_mwh,
                        double alert_quantile);

std::vector<double> valid_residuals(const ResidualSeries& series);

struct UnderperformanceEvent {
  // Estimated span of the actual energy deficit.
  std::int64_t start = 0;
  std::int64_t end = 0;
  // Span of rolling-residual threshold exceedance (the alarm itself,
  // which trails the deficit by up to one horizon).
  std::int64_t alert_start = 0;
  std::int64_t alert_end = 0;
  double peak_deficit_mwh = 0.0;  // magnitude of the worst rolling residual
  double lost_energy_mwh = 0.0;
  double opportunity_cost = 0.0;
};

struct OverperformanceFlag {
  std::int64_t start = 0;
  std::int64_t end = 0;
  double peak_mwh = 0.0;
};

struct EventDetection {
  double threshold_mwh = 0.0;
  double alert_quantile = 0.0;
  std::vector<UnderperformanceEvent> events;
  // Positive-side exceedances, reported as data-quality flags.
  std::vector<OverperformanceFlag> overperformance;
};

// Maximal runs of valid steps with rolling residual <= -threshold; runs
// separated by less than merge_gap_hours are merged. The deficit span and
// lost energy come from per-step residuals over the window
// [alert_start - horizon, alert_end].
EventDetection detect_events(const ResidualSeries& series, double threshold,
                             const TurbineConfig& config);

}  // namespace windsentry

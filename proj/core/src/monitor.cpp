#include "windsentry/monitor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "windsentry/stats.hpp"
#include "windsentry/timeparse.hpp"

namespace windsentry {

std::vector<double> predict_expected(const FittedModel& model,
                                     const std::vector<ScadaRecord>& records) {
  return model.predict(build_feature_matrix(records, model.feature_set));
}

ResidualSeries rolling_energy_residual(const std::vector<ScadaRecord>& records,
                                       const std::vector<double>& expected_kw,
                                       const TurbineConfig& config) {
  if (records.size() != expected_kw.size()) {
    throw std::invalid_argument("rolling residual: series length mismatch");
  }
  const int horizon = config.horizon_steps();
  if (horizon < 1) throw std::invalid_argument("rolling residual: horizon < 1 step");

  ResidualSeries series;
  series.horizon_steps = horizon;
  if (records.empty()) return series;

  const std::int64_t t0 = records.front().timestamp;
  const std::int64_t t1 = records.back().timestamp;
  const auto n_grid =
      static_cast<std::size_t>((t1 - t0) / kStepSeconds) + 1;
  series.points.resize(n_grid);
  for (std::size_t g = 0; g < n_grid; ++g) {
    series.points[g].timestamp = t0 + static_cast<std::int64_t>(g) * kStepSeconds;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto g = static_cast<std::size_t>(
        (records[i].timestamp - t0) / kStepSeconds);
    ResidualPoint& pt = series.points[g];
    pt.present = true;
    pt.power_kw = records[i].power_kw;
    pt.expected_kw = expected_kw[i];
    pt.step_energy_kwh = records[i].power_kw / 6.0;
    pt.step_expected_kwh = expected_kw[i] / 6.0;
  }

  // Prefix sums over the grid; absent slots contribute zero.
  std::vector<double> sum(n_grid + 1, 0.0);
  std::vector<std::size_t> present(n_grid + 1, 0);
  for (std::size_t g = 0; g < n_grid; ++g) {
    const ResidualPoint& pt = series.points[g];
    sum[g + 1] = sum[g] + (pt.present
                               ? pt.step_energy_kwh - pt.step_expected_kwh
                               : 0.0);
    present[g + 1] = present[g] + (pt.present ? 1 : 0);
  }
  const auto h = static_cast<std::size_t>(horizon);
  const auto need = static_cast<std::size_t>(
      std::ceil(config.min_window_coverage * static_cast<double>(horizon)));
  for (std::size_t g = 0; g < n_grid; ++g) {
    const std::size_t from = g + 1 >= h ? g + 1 - h : 0;
    if (present[g + 1] - present[from] < need) continue;
    series.points[g].valid = true;
    series.points[g].rolling_residual_mwh =
        (sum[g + 1] - sum[from]) / 1000.0;
  }
  return series;
}

MetricVector compute_metrics(double p_kw, double p_exp_kw, double e_kwh,
                             double e_exp_kwh) {
  MetricVector m;
  m.m1 = p_kw - p_exp_kw;
  m.m2 = std::abs(m.m1);
  m.power_ratio_valid = std::abs(p_exp_kw) >= 1.0;
  m.energy_ratio_valid = std::abs(e_exp_kwh) >= 1.0;
  if (m.power_ratio_valid) {
    m.m5 = p_kw / p_exp_kw;
    m.m3 = m.m5 - 1.0;
    m.m4 = std::abs(m.m3);
  } else {
    m.m3 = m.m4 = m.m5 = std::numeric_limits<double>::quiet_NaN();
  }
  m.m6 = m.energy_ratio_valid ? e_kwh / e_exp_kwh
                              : std::numeric_limits<double>::quiet_NaN();
  return m;
}

std::vector<double> valid_residuals(const ResidualSeries& series) {
  std::vector<double> out;
  for (const auto& pt : series.points) {
    if (pt.valid) out.push_back(pt.rolling_residual_mwh);
  }
  return out;
}

double derive_threshold(const std::vector<double>& residuals_mwh,
                        double alert_quantile) {
  if (!(alert_quantile > 0.0 && alert_quantile < 0.5)) {
    throw std::invalid_argument("derive_threshold: bad alert quantile");
  }
  const auto needed = static_cast<std::size_t>(1.0 / alert_quantile);
  if (residuals_mwh.size() < needed) {
    throw std::runtime_error(
        "derive_threshold: insufficient history (" +
        std::to_string(residuals_mwh.size()) + " residuals, need " +
        std::to_string(needed) + ")");
  }
  std::vector<double> magnitudes(residuals_mwh.size());
  for (std::size_t i = 0; i < residuals_mwh.size(); ++i) {
    magnitudes[i] = std::abs(residuals_mwh[i]);
  }
  return interpolated_quantile(std::move(magnitudes), 1.0 - alert_quantile);
}

namespace {

struct Run {
  std::size_t first;
  std::size_t last;
};

std::vector<Run> exceedance_runs(const ResidualSeries& series,
                                 double threshold, bool underperformance) {
  std::vector<Run> runs;
  bool open = false;
  for (std::size_t g = 0; g < series.points.size(); ++g) {
    const ResidualPoint& pt = series.points[g];
    const bool exceeds =
        pt.valid && (underperformance
                         ? pt.rolling_residual_mwh <= -threshold
                         : pt.rolling_residual_mwh >= threshold);
    if (exceeds) {
      if (!open) {
        runs.push_back({g, g});
        open = true;
      } else {
        runs.back().last = g;
      }
    } else {
      open = false;
    }
  }
  return runs;
}

}  // namespace

EventDetection detect_events(const ResidualSeries& series, double threshold,
                             const TurbineConfig& config) {
  if (threshold < 0.0) {
    throw std::invalid_argument("detect_events: negative threshold");
  }
  EventDetection det;
  det.threshold_mwh = threshold;
  det.alert_quantile = config.alert_quantile;

  auto runs = exceedance_runs(series, threshold, true);
  const auto merge_gap_seconds =
      static_cast<std::int64_t>(config.merge_gap_hours * 3600.0);
  std::vector<Run> merged;
  for (const Run& run : runs) {
    if (!merged.empty()) {
      const std::int64_t gap = series.points[run.first].timestamp -
                               series.points[merged.back().last].timestamp;
      if (gap < merge_gap_seconds) {
        merged.back().last = run.last;
        continue;
      }
    }
    merged.push_back(run);
  }

  const auto h = static_cast<std::size_t>(series.horizon_steps);
  for (const Run& run : merged) {
    UnderperformanceEvent ev;
    ev.alert_start = series.points[run.first].timestamp;
    ev.alert_end = series.points[run.last].timestamp;

    double worst = 0.0;
    for (std::size_t g = run.first; g <= run.last; ++g) {
      if (series.points[g].valid) {
        worst = std::min(worst, series.points[g].rolling_residual_mwh);
      }
    }
    ev.peak_deficit_mwh = -worst;

    // The deficit that raised the alarm lies somewhere in the union of
    // the exceeding windows. Locate it by thresholding per-step
    // residuals at half the worst step observed there.
    const std::size_t w_first = run.first + 1 >= h ? run.first + 1 - h : 0;
    const std::size_t w_last = run.last;
    double worst_step = 0.0;
    for (std::size_t g = w_first; g <= w_last; ++g) {
      const ResidualPoint& pt = series.points[g];
      if (pt.present) {
        worst_step = std::min(
            worst_step, (pt.step_energy_kwh - pt.step_expected_kwh) / 1000.0);
      }
    }
    std::size_t span_first = run.first;
    std::size_t span_last = run.last;
    if (worst_step < 0.0) {
      const double level = worst_step / 2.0;
      bool found = false;
      for (std::size_t g = w_first; g <= w_last; ++g) {
        const ResidualPoint& pt = series.points[g];
        if (!pt.present) continue;
        const double r = (pt.step_energy_kwh - pt.step_expected_kwh) / 1000.0;
        if (r <= level) {
          if (!found) span_first = g;
          span_last = g;
          found = true;
        }
      }
    }
    ev.start = series.points[span_first].timestamp;
    ev.end = series.points[span_last].timestamp;

    double span_sum = 0.0;
    for (std::size_t g = span_first; g <= span_last; ++g) {
      const ResidualPoint& pt = series.points[g];
      if (pt.present) {
        span_sum += (pt.step_energy_kwh - pt.step_expected_kwh) / 1000.0;
      }
    }
    ev.lost_energy_mwh = std::max(0.0, -span_sum);
    ev.opportunity_cost =
        ev.lost_energy_mwh * config.energy_price_per_mwh;
    det.events.push_back(ev);
  }

  for (const Run& run : exceedance_runs(series, threshold, false)) {
    OverperformanceFlag flag;
    flag.start = series.points[run.first].timestamp;
    flag.end = series.points[run.last].timestamp;
    double peak = 0.0;
    for (std::size_t g = run.first; g <= run.last; ++g) {
      if (series.points[g].valid) {
        peak = std::max(peak, series.points[g].rolling_residual_mwh);
      }
    }
    flag.peak_mwh = peak;
    det.overperformance.push_back(flag);
  }
  return det;
}

}  // namespace windsentry

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <vector>

#include <doctest/doctest.h>

#include "helpers.hpp"
#include "windsentry/monitor.hpp"
#include "windsentry/monitor_io.hpp"
#include "windsentry/rng.hpp"
#include "windsentry/scada.hpp"

using namespace windsentry;
using windsentry::testing::constant_series;
using windsentry::testing::kT0;
using windsentry::testing::make_record;

namespace {

std::vector<double> constant_expected(std::size_t n, double kw) {
  return std::vector<double>(n, kw);
}

std::int64_t ts(std::size_t step) {
  return kT0 + static_cast<std::int64_t>(step) * kStepSeconds;
}

}  // namespace

TEST_CASE("rolling residual is zero when power matches expectation") {
  TurbineConfig cfg;
  const auto records = constant_series(300, 8.0, 1650.0);
  const auto series =
      rolling_energy_residual(records, constant_expected(300, 1650.0), cfg);

  REQUIRE(series.points.size() == 300);
  CHECK(series.horizon_steps == 144);
  for (const auto& pt : series.points) {
    CHECK(pt.present);
    if (pt.valid) CHECK(pt.rolling_residual_mwh == 0.0);
  }
  // Coverage rule: valid once ceil(0.9 * 144) = 130 slots are present.
  CHECK_FALSE(series.points[128].valid);
  CHECK(series.points[129].valid);
  CHECK(series.points[299].valid);
}

TEST_CASE("halved power over a full horizon reads -39.6 MWh") {
  TurbineConfig cfg;
  const auto records = constant_series(432, 10.0, 1650.0);
  const auto series =
      rolling_energy_residual(records, constant_expected(432, 3300.0), cfg);

  // 144 steps * 275 kWh shortfall each.
  for (std::size_t g = 143; g < series.points.size(); ++g) {
    CHECK(series.points[g].rolling_residual_mwh == -39.6);
  }
  // Shorter leading windows scale with the number of present steps.
  CHECK(series.points[129].rolling_residual_mwh ==
        doctest::Approx(-35.75).epsilon(1e-12));
}

TEST_CASE("single-step deficit persists for exactly one horizon") {
  TurbineConfig cfg;
  auto records = constant_series(500, 10.0, 3300.0);
  records[200].power_kw = 2700.0;  // 600 kW short for ten minutes
  std::vector<double> expected = constant_expected(500, 3300.0);
  const auto series = rolling_energy_residual(records, expected, cfg);

  for (std::size_t g = 129; g < 500; ++g) {
    REQUIRE(series.points[g].valid);
    if (g >= 200 && g < 344) {
      CHECK(series.points[g].rolling_residual_mwh == -0.1);
    } else {
      CHECK(series.points[g].rolling_residual_mwh == 0.0);
    }
  }
}

TEST_CASE("rolling residual telescopes step by step") {
  TurbineConfig cfg;
  Rng rng(404);
  const std::size_t n = 400;
  std::vector<ScadaRecord> records;
  std::vector<double> expected;
  std::vector<double> diff_kwh;
  for (std::size_t i = 0; i < n; ++i) {
    const double power = 1000.0 + 400.0 * rng.gaussian();
    const double model = 1000.0 + 400.0 * rng.gaussian();
    records.push_back(make_record(i, 9.0, power));
    expected.push_back(model);
    diff_kwh.push_back(power / 6.0 - model / 6.0);
  }
  const auto series = rolling_energy_residual(records, expected, cfg);
  for (std::size_t g = 144; g < n; ++g) {
    const double delta = (series.points[g].rolling_residual_mwh -
                          series.points[g - 1].rolling_residual_mwh) *
                         1000.0;
    CHECK(delta ==
          doctest::Approx(diff_kwh[g] - diff_kwh[g - 144]).epsilon(1e-9));
  }
}

TEST_CASE("window validity tracks coverage across gaps") {
  TurbineConfig cfg;
  std::vector<ScadaRecord> records;
  for (std::size_t i = 0; i < 300; ++i) {
    if (i >= 150 && i < 170) continue;  // 20 missing steps
    records.push_back(make_record(i, 8.0, 1650.0));
  }
  const auto series = rolling_energy_residual(
      records, constant_expected(records.size(), 1650.0), cfg);

  REQUIRE(series.points.size() == 300);
  CHECK_FALSE(series.points[155].present);
  CHECK(series.points[149].valid);   // all 144 slots present
  CHECK(series.points[160].valid);   // 11 absent, 133 present
  CHECK_FALSE(series.points[169].valid);  // all 20 absent in window
  CHECK_FALSE(series.points[175].valid);
  CHECK(series.points[299].valid);
  for (const auto& pt : series.points) {
    if (pt.valid) CHECK(pt.rolling_residual_mwh == 0.0);
  }
}

TEST_CASE("rolling residual rejects bad inputs") {
  TurbineConfig cfg;
  const auto records = constant_series(10, 8.0, 1650.0);
  CHECK_THROWS_AS(
      rolling_energy_residual(records, constant_expected(9, 1650.0), cfg),
      std::invalid_argument);
  TurbineConfig zero = cfg;
  zero.horizon_hours = 0.0;
  CHECK_THROWS_AS(
      rolling_energy_residual(records, constant_expected(10, 1650.0), zero),
      std::invalid_argument);
}

TEST_CASE("metric vector worked example") {
  const auto m = compute_metrics(2000.0, 2500.0, 2000.0 / 6.0, 2500.0 / 6.0);
  CHECK(m.m1 == -500.0);
  CHECK(m.m2 == 500.0);
  CHECK(m.m3 == doctest::Approx(-0.2).epsilon(1e-12));
  CHECK(m.m4 == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(m.m5 == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(m.m6 == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(m.power_ratio_valid);
  CHECK(m.energy_ratio_valid);
}

TEST_CASE("metric vector at matched power is the identity point") {
  const auto m = compute_metrics(2100.0, 2100.0, 350.0, 350.0);
  CHECK(m.m1 == 0.0);
  CHECK(m.m2 == 0.0);
  CHECK(m.m3 == 0.0);
  CHECK(m.m4 == 0.0);
  CHECK(m.m5 == 1.0);
  CHECK(m.m6 == 1.0);
}

TEST_CASE("negative power keeps ratio metrics defined") {
  const auto m = compute_metrics(-15.0, 50.0, -2.5, 50.0 / 6.0);
  CHECK(m.power_ratio_valid);
  CHECK(m.m5 == doctest::Approx(-0.3).epsilon(1e-12));
  CHECK(m.m3 == doctest::Approx(-1.3).epsilon(1e-12));
  CHECK(m.m4 == doctest::Approx(1.3).epsilon(1e-12));
}

TEST_CASE("ratio metrics go NaN below the denominator floor") {
  const auto m = compute_metrics(120.0, 0.5, 20.0, 0.08);
  CHECK(m.m1 == 119.5);
  CHECK_FALSE(m.power_ratio_valid);
  CHECK_FALSE(m.energy_ratio_valid);
  CHECK(std::isnan(m.m3));
  CHECK(std::isnan(m.m4));
  CHECK(std::isnan(m.m5));
  CHECK(std::isnan(m.m6));

  // The floor is 1 in the denominator's own unit, on magnitude.
  CHECK(compute_metrics(10.0, -1.0, 1.0, 1.0).power_ratio_valid);
  CHECK_FALSE(compute_metrics(10.0, -0.99, 1.0, 1.0).power_ratio_valid);
}

TEST_CASE("metric identities hold over random valid inputs") {
  Rng rng(77);
  for (int i = 0; i < 100000; ++i) {
    const double p = -200.0 + 3700.0 * rng.uniform_unit();
    double p_exp = 1.0 + 3299.0 * rng.uniform_unit();
    if (rng.uniform_index(2) == 1) p_exp = -p_exp;
    const auto m = compute_metrics(p, p_exp, p / 6.0, p_exp / 6.0);
    REQUIRE(m.power_ratio_valid);
    REQUIRE(m.m2 == std::abs(m.m1));
    REQUIRE(m.m4 == std::abs(m.m3));
    REQUIRE(std::abs(m.m5 - (m.m3 + 1.0)) <= 1e-12);
  }
}

TEST_CASE("threshold of an all-zero history is zero") {
  CHECK(derive_threshold(std::vector<double>(2000, 0.0), 0.001) == 0.0);
}

TEST_CASE("threshold interpolates the magnitude quantile") {
  std::vector<double> residuals;
  for (int i = 1; i <= 100; ++i) {
    residuals.push_back(i % 2 == 0 ? double(i) : -double(i));
  }
  // 0.75 quantile of magnitudes 1..100 sits between 75 and 76.
  CHECK(derive_threshold(residuals, 0.25) ==
        doctest::Approx(75.25).epsilon(1e-12));
}

TEST_CASE("threshold needs at least 1/q residuals") {
  const std::vector<double> residuals(999, 1.0);
  CHECK_THROWS_AS(derive_threshold(residuals, 0.001), std::runtime_error);
  CHECK_NOTHROW(derive_threshold(std::vector<double>(1000, 1.0), 0.001));
  CHECK_THROWS_AS(derive_threshold(residuals, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(derive_threshold(residuals, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(derive_threshold(residuals, -0.1), std::invalid_argument);
}

TEST_CASE("threshold grows as the alert quantile shrinks") {
  Rng rng(9);
  std::vector<double> residuals;
  for (int i = 0; i < 10000; ++i) residuals.push_back(2.0 * rng.gaussian());
  const double t_loose = derive_threshold(residuals, 0.1);
  const double t_mid = derive_threshold(residuals, 0.01);
  const double t_tight = derive_threshold(residuals, 0.001);
  CHECK(t_loose < t_mid);
  CHECK(t_mid < t_tight);
}

TEST_CASE("no events on a clean series") {
  TurbineConfig cfg;
  const auto records = constant_series(400, 9.0, 2000.0);
  const auto series =
      rolling_energy_residual(records, constant_expected(400, 2000.0), cfg);
  const auto det = detect_events(series, 0.1, cfg);
  CHECK(det.events.empty());
  CHECK(det.overperformance.empty());
  CHECK(det.threshold_mwh == 0.1);
  CHECK_THROWS_AS(detect_events(series, -1.0, cfg), std::invalid_argument);
}

TEST_CASE("a 15 hour half-power stretch becomes one event") {
  TurbineConfig cfg;
  auto records = constant_series(600, 10.0, 3300.0);
  for (std::size_t i = 250; i < 340; ++i) records[i].power_kw = 1650.0;
  const auto series =
      rolling_energy_residual(records, constant_expected(600, 3300.0), cfg);
  const auto det = detect_events(series, 5.0, cfg);

  REQUIRE(det.events.size() == 1);
  CHECK(det.overperformance.empty());
  const auto& ev = det.events[0];

  // Exceedance begins once 19 derated steps fill the window and decays
  // one horizon after the fault clears.
  CHECK(ev.alert_start == ts(268));
  CHECK(ev.alert_end == ts(464));

  // The per-step scan recovers the injected span exactly.
  CHECK(ev.start == ts(250));
  CHECK(ev.end == ts(339));

  CHECK(ev.peak_deficit_mwh == 24.75);
  CHECK(ev.lost_energy_mwh == doctest::Approx(24.75).epsilon(1e-12));
  CHECK(ev.opportunity_cost ==
        doctest::Approx(24.75 * cfg.energy_price_per_mwh).epsilon(1e-12));
}

TEST_CASE("appending clean data never rewrites a past event") {
  TurbineConfig cfg;
  auto make = [&](std::size_t n) {
    auto records = constant_series(n, 10.0, 3300.0);
    for (std::size_t i = 250; i < 340; ++i) records[i].power_kw = 1650.0;
    return detect_events(
        rolling_energy_residual(records, constant_expected(n, 3300.0), cfg),
        5.0, cfg);
  };
  const auto before = make(600);
  const auto after = make(700);
  REQUIRE(before.events.size() == 1);
  REQUIRE(after.events.size() == 1);
  CHECK(before.events[0].start == after.events[0].start);
  CHECK(before.events[0].end == after.events[0].end);
  CHECK(before.events[0].alert_start == after.events[0].alert_start);
  CHECK(before.events[0].alert_end == after.events[0].alert_end);
  CHECK(before.events[0].peak_deficit_mwh == after.events[0].peak_deficit_mwh);
  CHECK(before.events[0].lost_energy_mwh == after.events[0].lost_energy_mwh);
}

namespace {

// Hand-built series for exercising the merge rule in isolation: every
// slot present and valid, step energies flat so the deficit span falls
// back to the exceedance run.
ResidualSeries synthetic_series(const std::vector<double>& rolling_mwh) {
  ResidualSeries series;
  series.horizon_steps = 6;
  series.points.resize(rolling_mwh.size());
  for (std::size_t g = 0; g < rolling_mwh.size(); ++g) {
    auto& pt = series.points[g];
    pt.timestamp = ts(g);
    pt.present = true;
    pt.valid = true;
    pt.rolling_residual_mwh = rolling_mwh[g];
  }
  return series;
}

}  // namespace

TEST_CASE("runs separated by less than the merge gap coalesce") {
  TurbineConfig cfg;  // merge_gap_hours = 1, six steps
  std::vector<double> rolling(30, 0.0);
  for (std::size_t g = 10; g <= 12; ++g) rolling[g] = -2.0;
  for (std::size_t g = 17; g <= 18; ++g) rolling[g] = -2.0;  // 3000 s away
  const auto det = detect_events(synthetic_series(rolling), 1.0, cfg);
  REQUIRE(det.events.size() == 1);
  CHECK(det.events[0].alert_start == ts(10));
  CHECK(det.events[0].alert_end == ts(18));
  CHECK(det.events[0].peak_deficit_mwh == 2.0);
  CHECK(det.events[0].lost_energy_mwh == 0.0);
}

TEST_CASE("runs a full merge gap apart stay separate") {
  TurbineConfig cfg;
  std::vector<double> rolling(30, 0.0);
  for (std::size_t g = 10; g <= 12; ++g) rolling[g] = -2.0;
  for (std::size_t g = 18; g <= 19; ++g) rolling[g] = -2.0;  // 3600 s away
  const auto det = detect_events(synthetic_series(rolling), 1.0, cfg);
  REQUIRE(det.events.size() == 2);
  CHECK(det.events[0].alert_start == ts(10));
  CHECK(det.events[0].alert_end == ts(12));
  CHECK(det.events[1].alert_start == ts(18));
  CHECK(det.events[1].alert_end == ts(19));
}

TEST_CASE("sustained overproduction raises a flag, not an event") {
  TurbineConfig cfg;
  auto records = constant_series(500, 10.0, 3300.0);
  std::vector<double> expected = constant_expected(500, 3300.0);
  for (std::size_t i = 200; i < 290; ++i) expected[i] = 1650.0;
  const auto series = rolling_energy_residual(records, expected, cfg);
  const auto det = detect_events(series, 5.0, cfg);

  CHECK(det.events.empty());
  REQUIRE(det.overperformance.size() == 1);
  CHECK(det.overperformance[0].start == ts(218));
  CHECK(det.overperformance[0].end == ts(414));
  CHECK(det.overperformance[0].peak_mwh == 24.75);
}

TEST_CASE("residuals csv round trips the series points") {
  TurbineConfig cfg;
  Rng rng(11);
  std::vector<ScadaRecord> records;
  std::vector<double> expected;
  for (std::size_t i = 0; i < 250; ++i) {
    if (i >= 60 && i < 80) continue;
    records.push_back(make_record(i, 8.0, 1400.0 + 100.0 * rng.gaussian()));
    expected.push_back(1400.0 + 30.0 * rng.gaussian());
  }
  const auto series = rolling_energy_residual(records, expected, cfg);

  const auto path =
      (std::filesystem::temp_directory_path() / "ws_residuals.csv").string();
  write_residuals_csv(path, series);
  const auto back = parse_residuals_csv(path);
  std::filesystem::remove(path);

  REQUIRE(back.points.size() == series.points.size());
  for (std::size_t g = 0; g < series.points.size(); ++g) {
    const auto& a = series.points[g];
    const auto& b = back.points[g];
    CHECK(a.timestamp == b.timestamp);
    CHECK(a.present == b.present);
    CHECK(a.valid == b.valid);
    if (a.present) {
      CHECK(a.power_kw == b.power_kw);
      CHECK(a.expected_kw == b.expected_kw);
      CHECK(a.step_energy_kwh == b.step_energy_kwh);
    }
    if (a.valid) CHECK(a.rolling_residual_mwh == b.rolling_residual_mwh);
  }
}

TEST_CASE("events json round trips every field") {
  TurbineConfig cfg;
  auto records = constant_series(600, 10.0, 3300.0);
  for (std::size_t i = 250; i < 340; ++i) records[i].power_kw = 1650.0;
  auto det = detect_events(
      rolling_energy_residual(records, constant_expected(600, 3300.0), cfg),
      5.0, cfg);
  det.alert_quantile = 0.001;
  OverperformanceFlag flag;
  flag.start = ts(2);
  flag.end = ts(4);
  flag.peak_mwh = 1.5;
  det.overperformance.push_back(flag);

  const auto path =
      (std::filesystem::temp_directory_path() / "ws_events.json").string();
  write_events_json(path, det);
  const auto back = parse_events_json(path);
  std::filesystem::remove(path);

  CHECK(back.threshold_mwh == det.threshold_mwh);
  CHECK(back.alert_quantile == det.alert_quantile);
  REQUIRE(back.events.size() == 1);
  CHECK(back.events[0].start == det.events[0].start);
  CHECK(back.events[0].end == det.events[0].end);
  CHECK(back.events[0].alert_start == det.events[0].alert_start);
  CHECK(back.events[0].alert_end == det.events[0].alert_end);
  CHECK(back.events[0].peak_deficit_mwh == det.events[0].peak_deficit_mwh);
  CHECK(back.events[0].lost_energy_mwh == det.events[0].lost_energy_mwh);
  CHECK(back.events[0].opportunity_cost == det.events[0].opportunity_cost);
  REQUIRE(back.overperformance.size() == 1);
  CHECK(back.overperformance[0].start == flag.start);
  CHECK(back.overperformance[0].end == flag.end);
  CHECK(back.overperformance[0].peak_mwh == flag.peak_mwh);

  CHECK(events_json_text(back) == events_json_text(det));
}

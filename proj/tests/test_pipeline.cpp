#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <vector>

#include <doctest/doctest.h>

#include "helpers.hpp"
#include "windsentry/diagnose.hpp"
#include "windsentry/gbm.hpp"
#include "windsentry/model_io.hpp"
#include "windsentry/monitor.hpp"
#include "windsentry/preprocess.hpp"
#include "windsentry/simulator.hpp"

using namespace windsentry;
using windsentry::testing::kT0;

namespace {

std::int64_t ts(std::size_t step) {
  return kT0 + static_cast<std::int64_t>(step) * kStepSeconds;
}

}  // namespace

// End-to-end composition without the CLI: simulate two months with one
// injected derate, train on the first month, monitor the second, then
// diagnose what was found.
TEST_CASE("modules compose from simulation to diagnosis") {
  Scenario sc;
  sc.duration_days = 61;
  sc.seed = 1234;

  // 15 hours at half power starting 2025-02-10, wind pinned nearby so
  // the deficit is steady.
  const std::size_t fault_from = 5760;
  const std::size_t fault_to = 5850;
  sc.weather.wind_pins.push_back(
      WindPin{ts(fault_from - 10), ts(fault_to + 10), 9.0});
  FaultSpec fault;
  fault.kind = FaultKind::PitchMisalignment;
  fault.start = ts(fault_from);
  fault.end = ts(fault_to);
  fault.derate_fraction = 0.5;
  fault.pitch_offset_deg = 5.0;
  sc.faults.push_back(fault);

  // A logged maintenance stop in the training month.
  sc.status_events.push_back(StatusEvent{ts(648), ts(660), 3});

  const auto out = generate(sc);
  REQUIRE(out.records.size() == 61 * 144);

  const std::int64_t split_at = ts(31 * 144);
  std::vector<ScadaRecord> history, monitored;
  for (const auto& rec : out.records) {
    (rec.timestamp < split_at ? history : monitored).push_back(rec);
  }

  TurbineConfig cfg;
  const auto cleaned = clean(history, cfg);
  CHECK(cleaned.status_removed >= 12);
  CHECK(cleaned.clean.size() + cleaned.removed.size() + cleaned.status_removed ==
        history.size());
  CHECK(cleaned.removed.size() < history.size() / 50);

  const auto x_train = build_feature_matrix(cleaned.clean, FeatureSet::VDT);
  const auto y_train = extract_targets(cleaned.clean);
  const auto model =
      fit_gbm(x_train, y_train, GbmParams{}, 7, FeatureSet::VDT, cfg.rated_power_kw);

  // Alert level from the clean training month's own residuals.
  const auto history_series = rolling_energy_residual(
      cleaned.clean, model.predict(x_train), cfg);
  const double threshold =
      derive_threshold(valid_residuals(history_series), cfg.alert_quantile);
  CHECK(threshold > 0.05);
  CHECK(threshold < 1.5);

  const auto series = rolling_energy_residual(
      monitored, predict_expected(model, monitored), cfg);
  const auto detection = detect_events(series, threshold, cfg);
  REQUIRE(!detection.events.empty());

  const auto worst = std::max_element(
      detection.events.begin(), detection.events.end(),
      [](const auto& a, const auto& b) {
        return a.peak_deficit_mwh < b.peak_deficit_mwh;
      });
  CHECK(worst->peak_deficit_mwh > 5.0);
  CHECK(worst->peak_deficit_mwh > threshold);
  CHECK(std::abs(worst->start - fault.start) <= 7200);
  CHECK(std::abs(worst->end - (fault.end - kStepSeconds)) <= 7200);

  double truth_deficit_kwh = 0.0;
  for (const auto& pt : out.truth) {
    truth_deficit_kwh += pt.injected_deficit_kwh;
  }
  CHECK(worst->lost_energy_mwh ==
        doctest::Approx(truth_deficit_kwh / 1000.0).epsilon(0.2));

  for (const auto& ev : detection.events) {
    if (ev.start != worst->start) CHECK(ev.peak_deficit_mwh < 2.0);
  }

  // The offset pitch should dominate the diagnosis.
  const auto diag = diagnose_event(*worst, out.records, cfg);
  REQUIRE(!diag.channels.empty());
  CHECK(diag.channels[0].channel == "pitch_angle");
  REQUIRE(diag.channels[0].z.has_value());
  CHECK(*diag.channels[0].z > 1.0);
  bool bin9_flagged = false;
  for (const auto& row : diag.pitch_table) {
    if (row.bin_lo == 9.0) bin9_flagged = row.outside_band;
  }
  CHECK(bin9_flagged);

  // Persisting the model must not change what the monitor sees.
  const auto model_path =
      (std::filesystem::temp_directory_path() / "ws_pipe_model.json").string();
  save_model(model_path, model);
  const auto reloaded = load_model(model_path);
  std::filesystem::remove(model_path);
  const auto again = predict_expected(reloaded, monitored);
  const auto first = predict_expected(model, monitored);
  REQUIRE(again.size() == first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i] == again[i]);
  }

  // Out-of-sample accuracy on the unfaulted part of the monitored span.
  std::vector<ScadaRecord> holdout;
  for (const auto& rec : monitored) {
    if (rec.timestamp < ts(fault_from - 10) || rec.timestamp >= ts(fault_to + 10)) {
      holdout.push_back(rec);
    }
  }
  const auto ev = evaluate(model, build_feature_matrix(holdout, FeatureSet::VDT),
                           extract_targets(holdout));
  CHECK(ev.rmse < 90.0);
  REQUIRE(ev.r2.has_value());
  CHECK(*ev.r2 > 0.98);
}

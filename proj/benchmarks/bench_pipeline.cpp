#include <benchmark/benchmark.h>

#include <vector>

#include "windsentry/gbm.hpp"
#include "windsentry/monitor.hpp"
#include "windsentry/preprocess.hpp"
#include "windsentry/rng.hpp"
#include "windsentry/scada.hpp"

namespace {

using namespace windsentry;

std::vector<ScadaRecord> synthetic_month(std::size_t n) {
  Rng rng(7);
  std::vector<ScadaRecord> records(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& r = records[i];
    r.timestamp = 1735689600 + static_cast<std::int64_t>(i) * 600;
    r.wind_speed_mps = 3.0 + 15.0 * rng.uniform_unit();
    r.wind_dir_deg = 360.0 * rng.uniform_unit();
    r.air_temp_c = 5.0 + 10.0 * rng.uniform_unit();
    const double v = r.wind_speed_mps;
    r.power_kw = v >= 12.0 ? 3300.0 : 3300.0 * (v * v * v - 27.0) / 1701.0;
    r.power_kw += rng.gaussian(0.0, 50.0);
    r.pitch_angle_deg = rng.gaussian(0.0, 0.4);
  }
  return records;
}

void BM_GbmFit(benchmark::State& state) {
  const auto records = synthetic_month(static_cast<std::size_t>(state.range(0)));
  Matrix x = build_feature_matrix(records, FeatureSet::VDT);
  std::vector<double> y = extract_targets(records);
  GbmParams params;
  params.n_stages = 50;
  for (auto _ : state) {
    FittedModel model = fit_gbm(x, y, params, 11, FeatureSet::VDT, 3300.0);
    benchmark::DoNotOptimize(model);
  }
}
BENCHMARK(BM_GbmFit)->Arg(2000)->Arg(4464)->Unit(benchmark::kMillisecond);

void BM_BinQuantiles(benchmark::State& state) {
  const auto records = synthetic_month(static_cast<std::size_t>(state.range(0)));
  TurbineConfig config;
  for (auto _ : state) {
    auto bands = compute_bin_quantiles(records, config);
    benchmark::DoNotOptimize(bands);
  }
}
BENCHMARK(BM_BinQuantiles)->Arg(4464)->Arg(52560);

void BM_RollingResidual(benchmark::State& state) {
  const auto records = synthetic_month(static_cast<std::size_t>(state.range(0)));
  TurbineConfig config;
  std::vector<double> expected(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    expected[i] = records[i].power_kw;
  }
  for (auto _ : state) {
    auto series = rolling_energy_residual(records, expected, config);
    benchmark::DoNotOptimize(series);
  }
}
BENCHMARK(BM_RollingResidual)->Arg(4464)->Arg(52560);

}  // namespace

BENCHMARK_MAIN();

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "windsentry/preprocess.hpp"
#include "windsentry/rng.hpp"

using namespace windsentry;
using namespace windsentry::testing;

namespace {

const TurbineConfig kConfig{};

std::set<std::int64_t> timestamps(const std::vector<ScadaRecord>& records) {
  std::set<std::int64_t> out;
  for (const auto& r : records) out.insert(r.timestamp);
  return out;
}

}  // namespace

TEST_CASE("status filter radius behavior") {
  auto records = constant_series(10, 8.0, 1000.0);
  CHECK(filter_status(records, 1) == records);

  auto one_bad = records;
  one_bad[4].status_code = 3;
  const auto filtered = filter_status(one_bad, 1);
  REQUIRE(filtered.size() == 7);
  const auto kept = timestamps(filtered);
  for (std::size_t i : {3, 4, 5}) {
    CHECK(kept.count(kT0 + static_cast<std::int64_t>(i) * 600) == 0);
  }

  // two faults one step apart, radius 1 -> merged span of 4 removed
  auto two_bad = records;
  two_bad[4].status_code = 1;
  two_bad[6].status_code = 2;
  const auto merged = filter_status(two_bad, 1);
  CHECK(merged.size() == 5);
  const auto kept2 = timestamps(merged);
  for (std::size_t i : {3, 4, 5, 6, 7}) {
    CHECK(kept2.count(kT0 + static_cast<std::int64_t>(i) * 600) == 0);
  }

  // radius clamps at the edges without underflow
  auto edge = records;
  edge[0].status_code = 9;
  CHECK(filter_status(edge, 2).size() == 7);
}

TEST_CASE("bin quantiles on hand-built bins") {
  std::vector<ScadaRecord> records;
  // bin [3,4): constant 1500 -> degenerate band
  for (int i = 0; i < 15; ++i) {
    records.push_back(make_record(records.size(), 3.4, 1500.0));
  }
  // bin [5,6): 0,100,...,1900
  for (int i = 0; i < 20; ++i) {
    records.push_back(make_record(records.size(), 5.5, 100.0 * i));
  }
  const auto bands = compute_bin_quantiles(records, kConfig);
  REQUIRE(bands.bins.size() == 6);

  const auto& degenerate = bands.bins[3];
  CHECK(degenerate.count == 15);
  CHECK(degenerate.q_lo_kw == 1500.0);
  CHECK(degenerate.q_hi_kw == 1500.0);
  CHECK(degenerate.median_kw == 1500.0);
  CHECK_FALSE(degenerate.filtering_disabled);

  const auto& spread = bands.bins[5];
  CHECK(spread.count == 20);
  CHECK(spread.q_lo_kw == doctest::Approx(95.0).epsilon(1e-12));
  CHECK(spread.q_hi_kw == doctest::Approx(1805.0).epsilon(1e-12));
  CHECK(spread.median_kw == doctest::Approx(950.0).epsilon(1e-12));

  // speed 3.4 lands in [3,4) by the floor rule
  CHECK(bands.bin_index(3.4) == 3);
  CHECK(bands.bins[3].lo == 3.0);
  CHECK(bands.bins[3].hi == 4.0);
  // sparse bins get no filtering
  CHECK(bands.bins[0].count == 0);
  CHECK(bands.bins[0].filtering_disabled);

  CHECK_THROWS_AS(compute_bin_quantiles({}, kConfig), std::invalid_argument);
}

TEST_CASE("outlier margin arithmetic with strict boundaries") {
  // Pin the band to q_lo=1000, q_hi=2000 directly so the keep range is
  // exactly [500, 2500] at margin 0.5.
  BinQuantiles bands;
  bands.bin_width = 1.0;
  bands.bins.resize(9);
  for (std::size_t b = 0; b < bands.bins.size(); ++b) {
    bands.bins[b].lo = static_cast<double>(b);
    bands.bins[b].hi = static_cast<double>(b) + 1.0;
  }
  auto& bin = bands.bins[8];
  bin.q_lo_kw = 1000.0;
  bin.q_hi_kw = 2000.0;
  bin.median_kw = 1500.0;
  bin.count = 100;
  bin.filtering_disabled = false;

  // margin 0.5 -> keep range [500, 2500]
  auto probe = [&](double power) {
    const std::vector<ScadaRecord> one = {make_record(0, 8.5, power)};
    return flag_outliers(one, bands, 0.5).flagged[0] != 0;
  };
  CHECK_FALSE(probe(2500.0));  // boundary kept (strict inequality)
  CHECK(probe(2500.1));
  CHECK_FALSE(probe(500.0));
  CHECK(probe(499.9));
  CHECK_FALSE(probe(1500.0));

  // flagged set shrinks as the margin grows
  std::vector<ScadaRecord> sweep;
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    sweep.push_back(make_record(i, 8.5, rng.gaussian(1500.0, 600.0)));
  }
  const auto tight = flag_outliers(sweep, bands, 0.25).flagged;
  const auto loose = flag_outliers(sweep, bands, 0.75).flagged;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    if (loose[i]) CHECK(tight[i]);
  }

  // records beyond the last edge fall into the last bin and are counted
  const std::vector<ScadaRecord> fast = {make_record(0, 30.0, 1500.0),
                                         make_record(1, 30.0, 9000.0)};
  const auto flags = flag_outliers(fast, bands, 0.5);
  CHECK(flags.overflow == 2);
  CHECK_FALSE(flags.flagged[0] != 0);
  CHECK(flags.flagged[1] != 0);
}

TEST_CASE("clean gaussian data keeps roughly 99.9 percent") {
  // Expected flag rate 2*Phi(-3.29) ~ 0.1%; check within +-0.1pp on a
  // large sample. Wind speeds sit at bin centers so each bin sees a pure
  // gaussian power sample.
  Rng rng(4242);
  std::vector<ScadaRecord> records;
  const std::size_t n = 120000;
  for (std::size_t i = 0; i < n; ++i) {
    const double center = 0.5 + static_cast<double>(rng.uniform_index(12));
    records.push_back(
        make_record(i, center, rng.gaussian(1000.0 + 150.0 * center, 100.0)));
  }
  const auto result = clean(records, kConfig);
  CHECK(result.clean.size() + result.removed.size() == records.size());
  const double rate =
      static_cast<double>(result.removed.size()) / static_cast<double>(n);
  CHECK(rate < 0.002);  // 0.1% theory + 0.1pp tolerance
  CHECK(result.status_removed == 0);

  // re-cleaning the clean output with the ORIGINAL bands removes nothing
  const auto again =
      flag_outliers(result.clean, result.bands, kConfig.outlier_margin);
  std::size_t reflagged = 0;
  for (char f : again.flagged) reflagged += f != 0;
  CHECK(reflagged == 0);
}

TEST_CASE("injected gross outliers are removed") {
  Rng rng(77);
  std::vector<ScadaRecord> records;
  std::vector<char> injected;
  const std::size_t n = 40000;
  const double sigma = 100.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double center = 0.5 + static_cast<double>(rng.uniform_index(12));
    const double base = 1000.0 + 150.0 * center;
    const bool outlier = rng.uniform_unit() < 0.05;
    double power = base + sigma * rng.gaussian();
    if (outlier) {
      power += (rng.uniform_unit() < 0.5 ? -10.0 : 10.0) * sigma;
    }
    records.push_back(make_record(i, center, power));
    injected.push_back(outlier ? 1 : 0);
  }
  const auto bands = compute_bin_quantiles(records, kConfig);
  const auto flags = flag_outliers(records, bands, kConfig.outlier_margin);
  std::size_t injected_total = 0, injected_caught = 0;
  std::size_t clean_total = 0, clean_flagged = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (injected[i]) {
      ++injected_total;
      injected_caught += flags.flagged[i] != 0;
    } else {
      ++clean_total;
      clean_flagged += flags.flagged[i] != 0;
    }
  }
  CHECK(static_cast<double>(injected_caught) / injected_total >= 0.99);
  CHECK(static_cast<double>(clean_flagged) / clean_total <= 0.01);
}

TEST_CASE("clean errors and partition invariant") {
  CHECK_THROWS_AS(clean({}, kConfig), std::runtime_error);

  // status filter that empties the input is an error, not empty output
  auto all_bad = constant_series(5, 8.0, 1000.0);
  for (auto& r : all_bad) r.status_code = 1;
  CHECK_THROWS(clean(all_bad, kConfig));

  Rng rng(3);
  std::vector<ScadaRecord> records;
  for (std::size_t i = 0; i < 400; ++i) {
    records.push_back(make_record(i, 5.5, rng.gaussian(1000.0, 100.0),
                                  180.0, 10.0,
                                  i % 97 == 0 ? 2 : 0));
  }
  const auto result = clean(records, kConfig);
  const auto survivors = filter_status(records, kConfig.status_exclusion_radius);
  CHECK(result.clean.size() + result.removed.size() == survivors.size());
  CHECK(result.status_removed == records.size() - survivors.size());
  // clean and removed are disjoint
  auto clean_ts = timestamps(result.clean);
  for (const auto& r : result.removed) {
    CHECK(clean_ts.count(r.timestamp) == 0);
  }
}

TEST_CASE("bands csv round trip") {
  std::vector<ScadaRecord> records;
  Rng rng(8);
  for (std::size_t i = 0; i < 200; ++i) {
    records.push_back(
        make_record(i, 4.5 + (i % 3), rng.gaussian(900.0, 80.0)));
  }
  const auto bands = compute_bin_quantiles(records, kConfig);
  const auto path =
      (std::filesystem::temp_directory_path() / "ws_bands.csv").string();
  write_bands_csv(path, bands);
  const auto reread = parse_bands_csv(path);
  std::filesystem::remove(path);
  CHECK(reread.bin_width == bands.bin_width);
  REQUIRE(reread.bins.size() >= 7);
  for (std::size_t b = 0; b < bands.bins.size(); ++b) {
    if (bands.bins[b].count == 0) continue;
    CHECK(reread.bins[b].q_lo_kw == bands.bins[b].q_lo_kw);
    CHECK(reread.bins[b].q_hi_kw == bands.bins[b].q_hi_kw);
    CHECK(reread.bins[b].median_kw == bands.bins[b].median_kw);
    CHECK(reread.bins[b].count == bands.bins[b].count);
  }
}

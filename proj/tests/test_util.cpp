#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <vector>

#include "windsentry/csvutil.hpp"
#include "windsentry/digest.hpp"
#include "windsentry/rng.hpp"
#include "windsentry/stats.hpp"
#include "windsentry/timeparse.hpp"

using namespace windsentry;

TEST_CASE("iso8601 parse and format") {
  CHECK(parse_iso8601_utc("2025-01-01T00:00:00Z") == 1735689600);
  CHECK(parse_iso8601_utc("1970-01-01T00:00:00Z") == 0);
  CHECK(parse_iso8601_utc("2024-02-29T12:30:00Z").has_value());  // leap day
  CHECK_FALSE(parse_iso8601_utc("2025-02-29T00:00:00Z").has_value());
  CHECK_FALSE(parse_iso8601_utc("2025-01-01 00:00:00Z").has_value());
  CHECK_FALSE(parse_iso8601_utc("2025-01-01T00:00:00").has_value());
  CHECK_FALSE(parse_iso8601_utc("2025-13-01T00:00:00Z").has_value());
  CHECK_FALSE(parse_iso8601_utc("2025-01-32T00:00:00Z").has_value());
  CHECK_FALSE(parse_iso8601_utc("2025-01-01T24:00:00Z").has_value());
  CHECK_FALSE(parse_iso8601_utc("").has_value());

  CHECK(format_iso8601_utc(1735689600) == "2025-01-01T00:00:00Z");
  for (std::int64_t t : {0L, 951827696L, 1735689600L, 4102444799L}) {
    const auto text = format_iso8601_utc(t);
    CHECK(parse_iso8601_utc(text) == t);
  }
}

TEST_CASE("ten minute grid predicate") {
  CHECK(on_ten_minute_grid(1735689600));
  CHECK(on_ten_minute_grid(1735689600 + 600));
  CHECK_FALSE(on_ten_minute_grid(1735689600 + 60));
  CHECK_FALSE(on_ten_minute_grid(1735689600 + 1));
}

TEST_CASE("year month extraction") {
  const YearMonth jan = year_month_utc(1735689600);
  CHECK(jan.year == 2025);
  CHECK(jan.month == 1);
  const YearMonth dec = year_month_utc(1735689600 - 1);
  CHECK(dec.year == 2024);
  CHECK(dec.month == 12);
}

TEST_CASE("csv primitives") {
  const auto fields = split_csv_line("a,b,,d");
  REQUIRE(fields.size() == 4);
  CHECK(fields[0] == "a");
  CHECK(fields[2] == "");

  CHECK(parse_double("1.5") == 1.5);
  CHECK(parse_double("-3e2") == -300.0);
  CHECK_FALSE(parse_double("1.5x").has_value());
  CHECK_FALSE(parse_double("").has_value());
  CHECK_FALSE(parse_double("nan").has_value());
  CHECK_FALSE(parse_double("inf").has_value());
  CHECK(parse_int("42") == 42);
  CHECK_FALSE(parse_int("42.0").has_value());

  for (double v : {0.1, 1.0 / 3.0, -1234.5678901234, 3300.0, 1e-17}) {
    CHECK(parse_double(format_double(v)) == v);
  }
}

TEST_CASE("text file round trip") {
  const auto path =
      (std::filesystem::temp_directory_path() / "ws_util_io.txt").string();
  write_text_file(path, "one\r\ntwo\nthree");
  const auto lines = read_lines(path);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "one");
  CHECK(lines[1] == "two");
  CHECK(lines[2] == "three");
  CHECK(read_text_file(path) == "one\r\ntwo\nthree");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_text_file(path), std::runtime_error);
}

TEST_CASE("rng determinism and ranges") {
  Rng a(123), b(123), c(124);
  bool same = true, differ = false;
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    same = same && va == b.next_u64();
    differ = differ || va != c.next_u64();
  }
  CHECK(same);
  CHECK(differ);

  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.uniform_index(13) < 13);
    const double u = r.uniform_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("rng gaussian moments") {
  Rng r(99);
  const int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = r.gaussian();
    sum += g;
    sq += g * g;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(var - 1.0) < 0.02);
  Rng r2(5);
  const double g = r2.gaussian(100.0, 10.0);
  CHECK(std::isfinite(g));
}

TEST_CASE("rng shuffle is a permutation") {
  std::vector<std::size_t> v(50);
  for (std::size_t i = 0; i < 50; ++i) v[i] = i;
  Rng r(3);
  auto shuffled = v;
  r.shuffle(shuffled);
  CHECK(shuffled != v);  // 50! makes identity astronomically unlikely
  auto sorted = shuffled;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == v);
}

TEST_CASE("sample without replacement") {
  Rng r(11);
  const auto sample = r.sample_without_replacement(100, 30);
  REQUIRE(sample.size() == 30);
  std::set<std::size_t> unique(sample.begin(), sample.end());
  CHECK(unique.size() == 30);
  for (auto idx : sample) CHECK(idx < 100);

  const auto all = Rng(11).sample_without_replacement(10, 10);
  std::set<std::size_t> full(all.begin(), all.end());
  CHECK(full.size() == 10);
}

TEST_CASE("mix_seed separates streams") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t a = 0; a < 4; ++a) {
    for (std::uint64_t b = 0; b < 4; ++b) {
      for (std::uint64_t c = 0; c < 4; ++c) {
        seeds.insert(mix_seed(a, b, c));
      }
    }
  }
  CHECK(seeds.size() == 64);
  CHECK(mix_seed(1, 2, 3) == mix_seed(1, 2, 3));
}

TEST_CASE("interpolated quantile oracle") {
  // 20 points 0,100,...,1900: h = (n-1)q gives 95 and 1805 at the 5% and
  // 95% levels.
  std::vector<double> values;
  for (int i = 0; i < 20; ++i) values.push_back(100.0 * i);
  std::reverse(values.begin(), values.end());
  CHECK(interpolated_quantile(values, 0.05) == doctest::Approx(95.0).epsilon(1e-12));
  CHECK(interpolated_quantile(values, 0.95) == doctest::Approx(1805.0).epsilon(1e-12));
  CHECK(interpolated_quantile(values, 0.0) == 0.0);
  CHECK(interpolated_quantile(values, 1.0) == 1900.0);
  CHECK(interpolated_quantile({42.0}, 0.5) == 42.0);
  CHECK_THROWS_AS(interpolated_quantile({}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(interpolated_quantile({1.0}, 1.5), std::invalid_argument);
}

TEST_CASE("mean and stddev") {
  CHECK(mean({1.0, 2.0, 3.0}) == 2.0);
  CHECK_THROWS_AS(mean({}), std::invalid_argument);
  CHECK(sample_stddev({2.0, 4.0}) == doctest::Approx(std::sqrt(2.0)));
  CHECK(sample_stddev({5.0}) == 0.0);
}

TEST_CASE("fnv1a64 known vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("hello") == 0xa430d84680aabd0bULL);
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a").size() == 16);
}

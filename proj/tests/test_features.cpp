#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "helpers.hpp"
#include "windsentry/features.hpp"

using namespace windsentry;
using namespace windsentry::testing;

TEST_CASE("feature set shapes and names") {
  CHECK(feature_dim(FeatureSet::V) == 1);
  CHECK(feature_dim(FeatureSet::VD) == 3);
  CHECK(feature_dim(FeatureSet::VDT) == 4);
  CHECK(feature_set_from_name("VDT") == FeatureSet::VDT);
  CHECK(feature_set_name(FeatureSet::VD) == std::string("VD"));
  CHECK_THROWS_AS(feature_set_from_name("bogus"), std::invalid_argument);
  const auto names = feature_names(FeatureSet::VDT);
  REQUIRE(names.size() == 4);
  CHECK(names[0] == "wind_speed");
  CHECK(names[3] == "air_temp");
}

TEST_CASE("trig encoding of direction") {
  const auto north = build_features(make_record(0, 8.0, 0.0, 0.0), FeatureSet::VD);
  CHECK(north[1] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(north[2] == 1.0);

  // VDT on (v=8, dir=90, T=10) -> [8, 1, ~0, 10]
  const auto east =
      build_features(make_record(0, 8.0, 500.0, 90.0, 10.0), FeatureSet::VDT);
  REQUIRE(east.size() == 4);
  CHECK(east[0] == 8.0);
  CHECK(east[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(east[2]) < 1e-15);
  CHECK(east[3] == 10.0);

  // wraparound continuity across the 0/360 seam
  const auto a =
      build_features(make_record(0, 8.0, 0.0, 359.9), FeatureSet::VD);
  const auto b = build_features(make_record(0, 8.0, 0.0, 0.1), FeatureSet::VD);
  for (std::size_t j = 0; j < a.size(); ++j) {
    CHECK(std::abs(a[j] - b[j]) <= 0.004);
  }
}

TEST_CASE("feature matrix layout") {
  std::vector<ScadaRecord> records = {
      make_record(0, 5.0, 100.0, 45.0, 3.0),
      make_record(1, 6.0, 200.0, 135.0, 4.0),
  };
  const Matrix m = build_feature_matrix(records, FeatureSet::VDT);
  CHECK(m.rows == 2);
  CHECK(m.cols == 4);
  CHECK(m.at(0, 0) == 5.0);
  CHECK(m.at(1, 3) == 4.0);
  const auto y = extract_targets(records);
  CHECK(y == std::vector<double>{100.0, 200.0});
}

TEST_CASE("train test split sizes and determinism") {
  const auto split = train_test_split(1000, 0.7, 42);
  CHECK(split.train.size() == 700);
  CHECK(split.test.size() == 300);

  // disjoint and exhaustive
  std::set<std::size_t> all(split.train.begin(), split.train.end());
  all.insert(split.test.begin(), split.test.end());
  CHECK(all.size() == 1000);

  const auto same = train_test_split(1000, 0.7, 42);
  CHECK(same.train == split.train);
  CHECK(same.test == split.test);

  const auto other = train_test_split(1000, 0.7, 43);
  CHECK(other.train != split.train);

  CHECK_THROWS_AS(train_test_split(9, 0.7, 1), std::invalid_argument);
  CHECK_THROWS_AS(train_test_split(100, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(train_test_split(100, 1.0, 1), std::invalid_argument);
}

TEST_CASE("take_rows and take select by index") {
  Matrix m(3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    m.at(i, 0) = static_cast<double>(i);
    m.at(i, 1) = 10.0 * static_cast<double>(i);
  }
  const Matrix sub = take_rows(m, {2, 0});
  CHECK(sub.rows == 2);
  CHECK(sub.at(0, 1) == 20.0);
  CHECK(sub.at(1, 0) == 0.0);
  CHECK(take({5.0, 6.0, 7.0}, {1, 2}) == std::vector<double>{6.0, 7.0});
}

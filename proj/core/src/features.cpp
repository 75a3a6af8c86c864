#include "windsentry/features.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "windsentry/rng.hpp"

namespace windsentry {

const char* feature_set_name(FeatureSet fs) {
  switch (fs) {
    case FeatureSet::V:
      return "V";
    case FeatureSet::VD:
      return "VD";
    case FeatureSet::VDT:
      return "VDT";
  }
  return "?";
}

FeatureSet feature_set_from_name(const std::string& name) {
  if (name == "V") return FeatureSet::V;
  if (name == "VD") return FeatureSet::VD;
  if (name == "VDT") return FeatureSet::VDT;
  throw std::invalid_argument("unknown feature set: " + name);
}

std::size_t feature_dim(FeatureSet fs) {
  switch (fs) {
    case FeatureSet::V:
      return 1;
    case FeatureSet::VD:
      return 3;
    case FeatureSet::VDT:
      return 4;
  }
  return 0;
}

std::vector<std::string> feature_names(FeatureSet fs) {
  std::vector<std::string> names{"wind_speed"};
  if (fs != FeatureSet::V) {
    names.push_back("sin_dir");
    names.push_back("cos_dir");
  }
  if (fs == FeatureSet::VDT) names.push_back("air_temp");
  return names;
}

void build_features(const ScadaRecord& rec, FeatureSet fs, double* out) {
  out[0] = rec.wind_speed_mps;
  if (fs == FeatureSet::V) return;
  const double rad = rec.wind_dir_deg * (std::numbers::pi / 180.0);
  out[1] = std::sin(rad);
  out[2] = std::cos(rad);
  if (fs == FeatureSet::VDT) out[3] = rec.air_temp_c;
}

std::vector<double> build_features(const ScadaRecord& rec, FeatureSet fs) {
  std::vector<double> out(feature_dim(fs));
  build_features(rec, fs, out.data());
  return out;
}

Matrix build_feature_matrix(const std::vector<ScadaRecord>& records,
                            FeatureSet fs) {
  Matrix m(records.size(), feature_dim(fs));
  for (std::size_t i = 0; i < records.size(); ++i) {
    build_features(records[i], fs, m.row(i));
  }
  return m;
}

std::vector<double> extract_targets(const std::vector<ScadaRecord>& records) {
  std::vector<double> y(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) y[i] = records[i].power_kw;
  return y;
}

SplitIndices train_test_split(std::size_t n, double ratio,
                              std::uint64_t seed) {
  if (n < 10) {
    throw std::invalid_argument("train_test_split: need at least 10 rows");
  }
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("train_test_split: ratio outside (0, 1)");
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);
  const std::size_t n_train =
      static_cast<std::size_t>(ratio * static_cast<double>(n));
  SplitIndices split;
  split.train.assign(order.begin(), order.begin() + n_train);
  split.test.assign(order.begin() + n_train, order.end());
  return split;
}

Matrix take_rows(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix out(idx.size(), m.cols);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const double* src = m.row(idx[i]);
    double* dst = out.row(i);
    for (std::size_t j = 0; j < m.cols; ++j) dst[j] = src[j];
  }
  return out;
}

std::vector<double> take(const std::vector<double>& v,
                         const std::vector<std::size_t>& idx) {
  std::vector<double> out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = v[idx[i]];
  return out;
}

}  // namespace windsentry

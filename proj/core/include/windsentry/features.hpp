#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "windsentry/scada.hpp"

namespace windsentry {

// Explanatory-variable sets for the power reference relation. Direction is
// encoded as (sin, cos) so the 0/360 seam does not split neighborhoods.
enum class FeatureSet { V, VD, VDT };

const char* feature_set_name(FeatureSet fs);
FeatureSet feature_set_from_name(const std::string& name);
std::size_t feature_dim(FeatureSet fs);
std::vector<std::string> feature_names(FeatureSet fs);

// Dense row-major matrix, just enough for the regressors.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double* row(std::size_t i) { return data.data() + i * cols; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }
  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

void build_features(const ScadaRecord& rec, FeatureSet fs, double* out);
std::vector<double> build_features(const ScadaRecord& rec, FeatureSet fs);
Matrix build_feature_matrix(const std::vector<ScadaRecord>& records,
                            FeatureSet fs);
std::vector<double> extract_targets(const std::vector<ScadaRecord>& records);

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

// Uniformly random partition with |train| = floor(ratio * n).
// Throws std::invalid_argument for n < 10 or ratio outside (0, 1).
SplitIndices train_test_split(std::size_t n, double ratio, std::uint64_t seed);

Matrix take_rows(const Matrix& m, const std::vector<std::size_t>& idx);
std::vector<double> take(const std::vector<double>& v,
                         const std::vector<std::size_t>& idx);

}  // namespace windsentry

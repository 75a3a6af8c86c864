#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "windsentry/features.hpp"

namespace windsentry {

enum class Algorithm { Gbm, RandomForest, Knn, BinCurve };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct GbmParams {
  int n_stages = 500;
  int max_depth = 4;
  double learning_rate = 0.05;
  double subsample = 0.8;
  int min_leaf = 5;
};

struct ForestParams {
  int n_trees = 300;
  int min_leaf = 5;
  int max_depth = 0;  // 0 = unlimited
  int mtry = 0;       // features tried per split, 0 = ceil(sqrt(d))
  bool bootstrap = true;
};

struct KnnParams {
  int k = 10;
};

// Fitted state behind a FittedModel. Implementations are immutable after
// fitting and safe to share across threads.
class Regressor {
 public:
  virtual ~Regressor() = default;
  virtual double predict_one(const double* x) const = 0;
};

struct FittedModel {
  Algorithm algorithm = Algorithm::Gbm;
  FeatureSet feature_set = FeatureSet::V;
  std::uint64_t seed = 0;
  double rated_power_kw = 3300.0;
  double train_rmse = 0.0;
  double holdout_rmse = 0.0;
  std::optional<double> holdout_r2;
  std::vector<std::string> warnings;
  std::shared_ptr<const Regressor> impl;

  // Raw regressor output clamped to [-rated, 1.5 * rated].
  double predict(const double* x) const;
  std::vector<double> predict(const Matrix& x) const;
};

struct Evaluation {
  double rmse = 0.0;
  std::optional<double> r2;  // absent when test targets have zero variance
};

// rmse = sqrt(mean squared error); r2 = 1 - SS_res / SS_tot about the
// test-set mean. Throws std::invalid_argument on empty input.
Evaluation evaluate(const FittedModel& model, const Matrix& x,
                    const std::vector<double>& y);
Evaluation evaluate_predictions(const std::vector<double>& predicted,
                                const std::vector<double>& actual);

}  // namespace windsentry

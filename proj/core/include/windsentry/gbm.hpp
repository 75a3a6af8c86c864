#pragma once

#include <cstdint>
#include <vector>

#include "windsentry/model.hpp"
#include "windsentry/tree.hpp"

namespace windsentry {

// Stagewise least-squares boosting: F0 = target mean, then each stage fits
// a depth-limited tree to the current residuals on a random subsample and
// adds learning_rate times its prediction.
class GbmModel : public Regressor {
 public:
  double init = 0.0;
  double learning_rate = 0.0;
  std::vector<RegressionTree> trees;
  // Full-training-sample MSE after the base prediction and after each
  // stage; size = 1 + trees.size().
  std::vector<double> train_loss;

  double predict_one(const double* x) const override;
};

// Throws std::invalid_argument for fewer than 50 rows or bad params.
FittedModel fit_gbm(const Matrix& x, const std::vector<double>& y,
                    const GbmParams& params, std::uint64_t seed,
                    FeatureSet feature_set, double rated_power_kw);

}  // namespace windsentry

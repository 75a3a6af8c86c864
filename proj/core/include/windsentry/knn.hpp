#pragma once

#include <cstdint>
#include <vector>

#include "windsentry/model.hpp"

namespace windsentry {

// k nearest neighbors on z-scored features. Zero-variance features are
// excluded from the distance; distance ties resolve to the lower training
// row index.
class KnnModel : public Regressor {
 public:
  int k = 1;
  std::vector<double> means;    // per feature, from the training set
  std::vector<double> stddevs;  // sample stddev, 0 marks a dropped feature
  Matrix train_z;               // z-scored training features (all columns)
  std::vector<double> targets;

  double predict_one(const double* x) const override;
};

FittedModel fit_knn(const Matrix& x, const std::vector<double>& y,
                    const KnnParams& params, std::uint64_t seed,
                    FeatureSet feature_set, double rated_power_kw);

}  // namespace windsentry

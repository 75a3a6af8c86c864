#pragma once

#include <cstdint>
#include <vector>

#include "windsentry/model.hpp"
#include "windsentry/tree.hpp"

namespace windsentry {

class ForestModel : public Regressor {
 public:
  std::vector<RegressionTree> trees;

  double predict_one(const double* x) const override;
};

// Bootstrap-aggregated regression trees with per-split feature
// subsampling (mtry 0 resolves to ceil(sqrt(dim))).
FittedModel fit_random_forest(const Matrix& x, const std::vector<double>& y,
                              const ForestParams& params, std::uint64_t seed,
                              FeatureSet feature_set, double rated_power_kw);

}  // namespace windsentry

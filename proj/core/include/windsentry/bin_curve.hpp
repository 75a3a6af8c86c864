#pragma once

#include <cstdint>
#include <vector>

#include "windsentry/model.hpp"

namespace windsentry {

// Piecewise-linear power curve through per-bin median power at bin
// centers; constant extrapolation beyond the outermost occupied centers.
// Only the wind-speed column (feature 0) is consulted.
class BinCurveModel : public Regressor {
 public:
  std::vector<double> centers;  // occupied bin centers, ascending
  std::vector<double> medians;

  double predict_one(const double* x) const override;
};

// Throws std::invalid_argument with fewer than 2 occupied bins.
FittedModel fit_bin_curve(const Matrix& x, const std::vector<double>& y,
                          double bin_width, FeatureSet feature_set,
                          double rated_power_kw);

}  // namespace windsentry

#include "windsentry/bin_curve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>

#include "windsentry/stats.hpp"

namespace windsentry {

double BinCurveModel::predict_one(const double* x) const {
  const double v = x[0];
  if (v <= centers.front()) return medians.front();
  if (v >= centers.back()) return medians.back();
  const auto it = std::upper_bound(centers.begin(), centers.end(), v);
  const auto hi = static_cast<std::size_t>(it - centers.begin());
  const std::size_t lo = hi - 1;
  const double t = (v - centers[lo]) / (centers[hi] - centers[lo]);
  return medians[lo] + t * (medians[hi] - medians[lo]);
}

FittedModel fit_bin_curve(const Matrix& x, const std::vector<double>& y,
                          double bin_width, FeatureSet feature_set,
                          double rated_power_kw) {
  if (x.rows == 0 || y.size() != x.rows) {
    throw std::invalid_argument("fit_bin_curve: bad input");
  }
  if (!(bin_width > 0.0)) {
    throw std::invalid_argument("fit_bin_curve: bad bin width");
  }
  std::map<std::size_t, std::vector<double>> by_bin;
  for (std::size_t i = 0; i < x.rows; ++i) {
    by_bin[static_cast<std::size_t>(x.at(i, 0) / bin_width)].push_back(y[i]);
  }
  if (by_bin.size() < 2) {
    throw std::invalid_argument("fit_bin_curve: need at least 2 occupied bins");
  }
  auto model = std::make_shared<BinCurveModel>();
  for (auto& [bin, powers] : by_bin) {
    model->centers.push_back((static_cast<double>(bin) + 0.5) * bin_width);
    model->medians.push_back(interpolated_quantile(std::move(powers), 0.5));
  }

  FittedModel fitted;
  fitted.algorithm = Algorithm::BinCurve;
  fitted.feature_set = feature_set;
  fitted.rated_power_kw = rated_power_kw;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.rows; ++i) {
    const double e = model->predict_one(x.row(i)) - y[i];
    ss += e * e;
  }
  fitted.train_rmse = std::sqrt(ss / static_cast<double>(x.rows));
  fitted.impl = std::move(model);
  return fitted;
}

}  // namespace windsentry

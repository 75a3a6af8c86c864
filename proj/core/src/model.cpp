#include "windsentry/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace windsentry {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Gbm:
      return "gbm";
    case Algorithm::RandomForest:
      return "random_forest";
    case Algorithm::Knn:
      return "knn";
    case Algorithm::BinCurve:
      return "bin_curve";
  }
  return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "gbm") return Algorithm::Gbm;
  if (name == "random_forest") return Algorithm::RandomForest;
  if (name == "knn") return Algorithm::Knn;
  if (name == "bin_curve") return Algorithm::BinCurve;
  throw std::invalid_argument("unknown algorithm: " + name);
}

double FittedModel::predict(const double* x) const {
  if (!impl) throw std::logic_error("FittedModel::predict on empty model");
  const double raw = impl->predict_one(x);
  const double lo = -rated_power_kw;
  const double hi = 1.5 * rated_power_kw;
  if (!std::isfinite(raw)) return lo;
  return std::clamp(raw, lo, hi);
}

std::vector<double> FittedModel::predict(const Matrix& x) const {
  std::vector<double> out(x.rows);
  for (std::size_t i = 0; i < x.rows; ++i) out[i] = predict(x.row(i));
  return out;
}

Evaluation evaluate_predictions(const std::vector<double>& predicted,
                                const std::vector<double>& actual) {
  if (actual.empty() || predicted.size() != actual.size()) {
    throw std::invalid_argument("evaluate: empty or mismatched series");
  }
  const std::size_t n = actual.size();
  double y_mean = 0.0;
  for (double y : actual) y_mean += y;
  y_mean /= static_cast<double>(n);

  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = predicted[i] - actual[i];
    ss_res += e * e;
    const double d = actual[i] - y_mean;
    ss_tot += d * d;
  }
  Evaluation ev;
  ev.rmse = std::sqrt(ss_res / static_cast<double>(n));
  if (ss_tot > 0.0) ev.r2 = 1.0 - ss_res / ss_tot;
  return ev;
}

Evaluation evaluate(const FittedModel& model, const Matrix& x,
                    const std::vector<double>& y) {
  return evaluate_predictions(model.predict(x), y);
}

}  // namespace windsentry

#include "windsentry/knn.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "windsentry/stats.hpp"

namespace windsentry {

double KnnModel::predict_one(const double* x) const {
  const std::size_t n = train_z.rows;
  const std::size_t dim = train_z.cols;
  std::vector<double> zq(dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    if (stddevs[j] > 0.0) zq[j] = (x[j] - means[j]) / stddevs[j];
  }
  std::vector<std::pair<double, std::size_t>> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = train_z.row(i);
    double d2 = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      if (stddevs[j] <= 0.0) continue;
      const double d = row[j] - zq[j];
      d2 += d * d;
    }
    dist[i] = {d2, i};
  }
  const auto kk = static_cast<std::size_t>(k);
  std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(kk),
                    dist.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < kk; ++i) sum += targets[dist[i].second];
  return sum / static_cast<double>(kk);
}

FittedModel fit_knn(const Matrix& x, const std::vector<double>& y,
                    const KnnParams& params, std::uint64_t seed,
                    FeatureSet feature_set, double rated_power_kw) {
  const std::size_t n = x.rows;
  if (n == 0) throw std::invalid_argument("fit_knn: no rows");
  if (y.size() != n) throw std::invalid_argument("fit_knn: row mismatch");
  if (params.k < 1 || static_cast<std::size_t>(params.k) > n) {
    throw std::invalid_argument("fit_knn: k must be in [1, n]");
  }

  auto model = std::make_shared<KnnModel>();
  model->k = params.k;
  model->targets = y;

  const std::size_t dim = x.cols;
  model->means.resize(dim);
  model->stddevs.resize(dim);
  std::vector<std::string> warnings;
  std::vector<double> column(n);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < n; ++i) column[i] = x.at(i, j);
    model->means[j] = mean(column);
    model->stddevs[j] = sample_stddev(column);
    if (model->stddevs[j] <= 0.0) {
      warnings.push_back("knn: feature " + std::to_string(j) +
                         " has zero variance, dropped from the distance");
    }
  }
  model->train_z = Matrix(n, dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      model->train_z.at(i, j) =
          model->stddevs[j] > 0.0
              ? (x.at(i, j) - model->means[j]) / model->stddevs[j]
              : 0.0;
    }
  }

  FittedModel fitted;
  fitted.algorithm = Algorithm::Knn;
  fitted.feature_set = feature_set;
  fitted.seed = seed;
  fitted.rated_power_kw = rated_power_kw;
  fitted.warnings = std::move(warnings);
  fitted.impl = model;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = model->predict_one(x.row(i)) - y[i];
    ss += e * e;
  }
  fitted.train_rmse = std::sqrt(ss / static_cast<double>(n));
  return fitted;
}

}  // namespace windsentry

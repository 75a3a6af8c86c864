#include "windsentry/forest.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "windsentry/rng.hpp"

namespace windsentry {

double ForestModel::predict_one(const double* x) const {
  double sum = 0.0;
  for (const auto& tree : trees) sum += tree.predict(x);
  return sum / static_cast<double>(trees.size());
}

FittedModel fit_random_forest(const Matrix& x, const std::vector<double>& y,
                              const ForestParams& params, std::uint64_t seed,
                              FeatureSet feature_set, double rated_power_kw) {
  const std::size_t n = x.rows;
  if (n < 50) {
    throw std::invalid_argument("fit_random_forest: need at least 50 rows");
  }
  if (y.size() != n) {
    throw std::invalid_argument("fit_random_forest: row mismatch");
  }
  if (params.n_trees < 1 || params.min_leaf < 1 || params.max_depth < 0 ||
      params.mtry < 0) {
    throw std::invalid_argument("fit_random_forest: bad hyperparameters");
  }

  int mtry = params.mtry;
  if (mtry == 0) {
    mtry = static_cast<int>(
        std::ceil(std::sqrt(static_cast<double>(x.cols))));
  }
  mtry = std::min(mtry, static_cast<int>(x.cols));
  TreeParams tree_params{params.max_depth, params.min_leaf, mtry};

  auto model = std::make_shared<ForestModel>();
  model->trees.resize(static_cast<std::size_t>(params.n_trees));
  Rng rng(seed);
  std::vector<std::size_t> rows(n);
  for (auto& tree : model->trees) {
    if (params.bootstrap) {
      for (std::size_t i = 0; i < n; ++i) rows[i] = rng.uniform_index(n);
    } else {
      for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    }
    tree.fit(x, y, rows, tree_params, &rng);
  }

  FittedModel fitted;
  fitted.algorithm = Algorithm::RandomForest;
  fitted.feature_set = feature_set;
  fitted.seed = seed;
  fitted.rated_power_kw = rated_power_kw;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = model->predict_one(x.row(i)) - y[i];
    ss += e * e;
  }
  fitted.train_rmse = std::sqrt(ss / static_cast<double>(n));
  fitted.impl = std::move(model);
  return fitted;
}

}  // namespace windsentry

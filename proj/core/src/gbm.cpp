#include "windsentry/gbm.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "windsentry/rng.hpp"

namespace windsentry {

double GbmModel::predict_one(const double* x) const {
  double out = init;
  for (const auto& tree : trees) out += learning_rate * tree.predict(x);
  return out;
}

FittedModel fit_gbm(const Matrix& x, const std::vector<double>& y,
                    const GbmParams& params, std::uint64_t seed,
                    FeatureSet feature_set, double rated_power_kw) {
  const std::size_t n = x.rows;
  if (n < 50) throw std::invalid_argument("fit_gbm: need at least 50 rows");
  if (y.size() != n) throw std::invalid_argument("fit_gbm: row mismatch");
  if (params.n_stages < 1 || params.max_depth < 1 || params.min_leaf < 1 ||
      !(params.learning_rate > 0.0) ||
      !(params.subsample > 0.0 && params.subsample <= 1.0)) {
    throw std::invalid_argument("fit_gbm: bad hyperparameters");
  }

  auto model = std::make_shared<GbmModel>();
  model->learning_rate = params.learning_rate;

  double sum = 0.0;
  for (double v : y) sum += v;
  model->init = sum / static_cast<double>(n);

  std::vector<double> pred(n, model->init);
  std::vector<double> residual(n);
  auto full_mse = [&] {
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = y[i] - pred[i];
      ss += e * e;
    }
    return ss / static_cast<double>(n);
  };
  model->train_loss.push_back(full_mse());

  Rng rng(seed);
  const std::size_t subsample_size = std::max<std::size_t>(
      1, static_cast<std::size_t>(params.subsample * static_cast<double>(n)));
  TreeParams tree_params{params.max_depth, params.min_leaf, 0};

  std::vector<double> leaf_sum;
  std::vector<std::size_t> leaf_count;

  model->trees.reserve(static_cast<std::size_t>(params.n_stages));
  for (int stage = 0; stage < params.n_stages; ++stage) {
    for (std::size_t i = 0; i < n; ++i) residual[i] = y[i] - pred[i];
    auto rows = rng.sample_without_replacement(n, subsample_size);
    RegressionTree tree;
    tree.fit(x, residual, std::move(rows), tree_params, nullptr);

    // The subsample decides the tree structure only. Leaf values are re-fit
    // as means of the full-sample residuals routed to each leaf, so every
    // stage is a descent step on the whole training set and the recorded
    // loss sequence cannot tick upward. Leaves keep their subsample value
    // if no row reaches them (cannot happen for rows seen during the fit).
    auto nodes = tree.nodes();
    leaf_sum.assign(nodes.size(), 0.0);
    leaf_count.assign(nodes.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const double* xi = x.row(i);
      std::int32_t node = 0;
      while (nodes[static_cast<std::size_t>(node)].feature >= 0) {
        const auto& nd = nodes[static_cast<std::size_t>(node)];
        node = xi[nd.feature] <= nd.threshold ? nd.left : nd.right;
      }
      leaf_sum[static_cast<std::size_t>(node)] += residual[i];
      leaf_count[static_cast<std::size_t>(node)] += 1;
    }
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (nodes[j].feature < 0 && leaf_count[j] > 0) {
        nodes[j].value = leaf_sum[j] / static_cast<double>(leaf_count[j]);
      }
    }
    tree.set_nodes(std::move(nodes));

    for (std::size_t i = 0; i < n; ++i) {
      pred[i] += params.learning_rate * tree.predict(x.row(i));
    }
    model->trees.push_back(std::move(tree));
    model->train_loss.push_back(full_mse());
  }

  FittedModel fitted;
  fitted.algorithm = Algorithm::Gbm;
  fitted.feature_set = feature_set;
  fitted.seed = seed;
  fitted.rated_power_kw = rated_power_kw;
  fitted.train_rmse = std::sqrt(model->train_loss.back());
  fitted.impl = std::move(model);
  return fitted;
}

}  // namespace windsentry

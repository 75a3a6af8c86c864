#include "windsentry/tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "windsentry/rng.hpp"

namespace windsentry {

namespace {

struct Builder {
  const Matrix& x;
  const std::vector<double>& y;
  const TreeParams& params;
  Rng* rng;
  std::vector<TreeNode>& nodes;
  std::vector<std::size_t>& rows;
  std::vector<std::size_t> scratch;
  std::vector<std::size_t> best_order;
  std::vector<std::size_t> feature_pool;

  std::int32_t build(std::size_t lo, std::size_t hi, int depth) {
    const std::size_t n = hi - lo;
    double sum = 0.0;
    for (std::size_t i = lo; i < hi; ++i) sum += y[rows[i]];

    const std::int32_t me = static_cast<std::int32_t>(nodes.size());
    nodes.push_back({});
    nodes[me].value = sum / static_cast<double>(n);

    if (params.max_depth > 0 && depth >= params.max_depth) return me;
    const auto min_leaf = static_cast<std::size_t>(params.min_leaf);
    if (n < 2 * min_leaf) return me;

    const std::size_t dim = x.cols;
    feature_pool.clear();
    if (params.mtry > 0 && static_cast<std::size_t>(params.mtry) < dim) {
      if (!rng) throw std::logic_error("tree: mtry without rng");
      feature_pool = rng->sample_without_replacement(
          dim, static_cast<std::size_t>(params.mtry));
      std::sort(feature_pool.begin(), feature_pool.end());
    } else {
      for (std::size_t f = 0; f < dim; ++f) feature_pool.push_back(f);
    }

    // Parent score; a split must strictly beat it.
    double best_gain = sum * sum / static_cast<double>(n);
    std::int32_t best_feature = -1;
    double best_threshold = 0.0;

    for (std::size_t f : feature_pool) {
      scratch.assign(rows.begin() + static_cast<std::ptrdiff_t>(lo),
                     rows.begin() + static_cast<std::ptrdiff_t>(hi));
      std::sort(scratch.begin(), scratch.end(),
                [&](std::size_t a, std::size_t b) {
                  const double xa = x.at(a, f);
                  const double xb = x.at(b, f);
                  if (xa != xb) return xa < xb;
                  return a < b;
                });
      double sum_left = 0.0;
      for (std::size_t i = 0; i + min_leaf < n; ++i) {
        sum_left += y[scratch[i]];
        if (i + 1 < min_leaf) continue;
        const double a = x.at(scratch[i], f);
        const double b = x.at(scratch[i + 1], f);
        if (!(b > a)) continue;
        const std::size_t n_left = i + 1;
        const std::size_t n_right = n - n_left;
        const double sum_right = sum - sum_left;
        const double gain = sum_left * sum_left / static_cast<double>(n_left) +
                            sum_right * sum_right / static_cast<double>(n_right);
        if (gain > best_gain) {
          best_gain = gain;
          best_feature = static_cast<std::int32_t>(f);
          double thr = a + (b - a) / 2.0;
          if (!(thr < b)) thr = a;
          best_threshold = thr;
        }
      }
    }
    if (best_feature < 0) return me;

    const auto mid_it = std::partition(
        rows.begin() + static_cast<std::ptrdiff_t>(lo),
        rows.begin() + static_cast<std::ptrdiff_t>(hi), [&](std::size_t r) {
          return x.at(r, static_cast<std::size_t>(best_feature)) <=
                 best_threshold;
        });
    const auto mid =
        static_cast<std::size_t>(mid_it - rows.begin());

    nodes[me].feature = best_feature;
    nodes[me].threshold = best_threshold;
    const std::int32_t left = build(lo, mid, depth + 1);
    nodes[me].left = left;
    const std::int32_t right = build(mid, hi, depth + 1);
    nodes[me].right = right;
    return me;
  }
};

}  // namespace

void RegressionTree::fit(const Matrix& x, const std::vector<double>& y,
                         std::vector<std::size_t> rows,
                         const TreeParams& params, Rng* rng) {
  if (rows.empty()) throw std::invalid_argument("tree: no training rows");
  if (params.min_leaf < 1) throw std::invalid_argument("tree: min_leaf < 1");
  nodes_.clear();
  Builder builder{x, y, params, rng, nodes_, rows, {}, {}, {}};
  builder.build(0, rows.size(), 0);
}

double RegressionTree::predict(const double* x) const {
  std::size_t i = 0;
  while (nodes_[i].feature >= 0) {
    i = x[static_cast<std::size_t>(nodes_[i].feature)] <= nodes_[i].threshold
            ? static_cast<std::size_t>(nodes_[i].left)
            : static_cast<std::size_t>(nodes_[i].right);
  }
  return nodes_[i].value;
}

}  // namespace windsentry

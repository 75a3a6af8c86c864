#pragma once

#include <cstdint>
#include <vector>

#include "windsentry/features.hpp"

namespace windsentry {

class Rng;

// feature < 0 marks a leaf; value is then the prediction. Internal nodes
// route x[feature] <= threshold to left, otherwise right.
struct TreeNode {
  std::int32_t feature = -1;
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  double value = 0.0;
};

struct TreeParams {
  int max_depth = 0;  // 0 = unlimited
  int min_leaf = 1;
  int mtry = 0;  // features considered per split, 0 or >= dim = all
};

// Deterministic least-squares regression tree. Splits maximize
// sum_left^2/n_left + sum_right^2/n_right over midpoints between distinct
// feature values; ties resolve to the lowest feature index, then the
// lowest threshold. Nodes are stored in DFS preorder, left subtree first.
class RegressionTree {
 public:
  // rows selects the training subset (duplicates allowed, e.g. bootstrap).
  // rng is only consulted when mtry is active; pass nullptr otherwise.
  void fit(const Matrix& x, const std::vector<double>& y,
           std::vector<std::size_t> rows, const TreeParams& params, Rng* rng);

  double predict(const double* x) const;

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  void set_nodes(std::vector<TreeNode> nodes) { nodes_ = std::move(nodes); }

 private:
  std::vector<TreeNode> nodes_;
};

}  // namespace windsentry

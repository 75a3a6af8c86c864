#include "windsentry/model_io.hpp"

#include <memory>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "windsentry/bin_curve.hpp"
#include "windsentry/csvutil.hpp"
#include "windsentry/forest.hpp"
#include "windsentry/gbm.hpp"
#include "windsentry/knn.hpp"

namespace windsentry {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "windsentry-model";
constexpr int kVersion = 1;

json trees_to_json(const std::vector<RegressionTree>& trees) {
  json out = json::array();
  for (const auto& tree : trees) {
    json nodes = json::array();
    for (const auto& n : tree.nodes()) {
      nodes.push_back(json::array(
          {n.feature, n.threshold, n.left, n.right, n.value}));
    }
    out.push_back(std::move(nodes));
  }
  return out;
}

std::vector<RegressionTree> trees_from_json(const json& j) {
  std::vector<RegressionTree> trees;
  for (const auto& jt : j) {
    std::vector<TreeNode> nodes;
    for (const auto& jn : jt) {
      TreeNode n;
      n.feature = jn.at(0).get<std::int32_t>();
      n.threshold = jn.at(1).get<double>();
      n.left = jn.at(2).get<std::int32_t>();
      n.right = jn.at(3).get<std::int32_t>();
      n.value = jn.at(4).get<double>();
      nodes.push_back(n);
    }
    RegressionTree tree;
    tree.set_nodes(std::move(nodes));
    trees.push_back(std::move(tree));
  }
  return trees;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  Matrix m;
  m.rows = j.size();
  m.cols = m.rows > 0 ? j.at(0).size() : 0;
  m.data.reserve(m.rows * m.cols);
  for (const auto& row : j) {
    if (row.size() != m.cols) throw std::runtime_error("ragged matrix");
    for (const auto& v : row) m.data.push_back(v.get<double>());
  }
  return m;
}

}  // namespace

std::string model_json_text(const FittedModel& model) {
  json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["algorithm"] = algorithm_name(model.algorithm);
  j["feature_set"] = feature_set_name(model.feature_set);
  j["feature_names"] = feature_names(model.feature_set);
  j["seed"] = model.seed;
  j["rated_power_kw"] = model.rated_power_kw;
  j["train_rmse"] = model.train_rmse;
  j["holdout_rmse"] = model.holdout_rmse;
  if (model.holdout_r2) {
    j["holdout_r2"] = *model.holdout_r2;
  } else {
    j["holdout_r2"] = nullptr;
  }
  j["warnings"] = model.warnings;

  json state;
  if (const auto* gbm = dynamic_cast<const GbmModel*>(model.impl.get())) {
    state["init"] = gbm->init;
    state["learning_rate"] = gbm->learning_rate;
    state["trees"] = trees_to_json(gbm->trees);
    state["train_loss"] = gbm->train_loss;
  } else if (const auto* rf =
                 dynamic_cast<const ForestModel*>(model.impl.get())) {
    state["trees"] = trees_to_json(rf->trees);
  } else if (const auto* knn =
                 dynamic_cast<const KnnModel*>(model.impl.get())) {
    state["k"] = knn->k;
    state["means"] = knn->means;
    state["stddevs"] = knn->stddevs;
    state["train_z"] = matrix_to_json(knn->train_z);
    state["targets"] = knn->targets;
  } else if (const auto* bc =
                 dynamic_cast<const BinCurveModel*>(model.impl.get())) {
    state["centers"] = bc->centers;
    state["medians"] = bc->medians;
  } else {
    throw std::runtime_error("model_json_text: unknown regressor type");
  }
  j["state"] = std::move(state);
  return j.dump(2) + "\n";
}

void save_model(const std::string& path, const FittedModel& model) {
  write_text_file(path, model_json_text(model));
}

FittedModel parse_model_json(const std::string& text,
                             const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kFormat) {
      throw std::runtime_error("not a model blob");
    }
    if (j.at("version").get<int>() != kVersion) {
      throw std::runtime_error("unsupported model version");
    }
    FittedModel model;
    model.algorithm = algorithm_from_name(j.at("algorithm").get<std::string>());
    model.feature_set =
        feature_set_from_name(j.at("feature_set").get<std::string>());
    model.seed = j.at("seed").get<std::uint64_t>();
    model.rated_power_kw = j.at("rated_power_kw").get<double>();
    model.train_rmse = j.at("train_rmse").get<double>();
    model.holdout_rmse = j.at("holdout_rmse").get<double>();
    if (!j.at("holdout_r2").is_null()) {
      model.holdout_r2 = j.at("holdout_r2").get<double>();
    }
    model.warnings = j.at("warnings").get<std::vector<std::string>>();

    const json& state = j.at("state");
    switch (model.algorithm) {
      case Algorithm::Gbm: {
        auto gbm = std::make_shared<GbmModel>();
        gbm->init = state.at("init").get<double>();
        gbm->learning_rate = state.at("learning_rate").get<double>();
        gbm->trees = trees_from_json(state.at("trees"));
        gbm->train_loss = state.at("train_loss").get<std::vector<double>>();
        model.impl = std::move(gbm);
        break;
      }
      case Algorithm::RandomForest: {
        auto rf = std::make_shared<ForestModel>();
        rf->trees = trees_from_json(state.at("trees"));
        if (rf->trees.empty()) throw std::runtime_error("empty forest");
        model.impl = std::move(rf);
        break;
      }
      case Algorithm::Knn: {
        auto knn = std::make_shared<KnnModel>();
        knn->k = state.at("k").get<int>();
        knn->means = state.at("means").get<std::vector<double>>();
        knn->stddevs = state.at("stddevs").get<std::vector<double>>();
        knn->train_z = matrix_from_json(state.at("train_z"));
        knn->targets = state.at("targets").get<std::vector<double>>();
        model.impl = std::move(knn);
        break;
      }
      case Algorithm::BinCurve: {
        auto bc = std::make_shared<BinCurveModel>();
        bc->centers = state.at("centers").get<std::vector<double>>();
        bc->medians = state.at("medians").get<std::vector<double>>();
        if (bc->centers.size() < 2 || bc->centers.size() != bc->medians.size()) {
          throw std::runtime_error("bad bin curve state");
        }
        model.impl = std::move(bc);
        break;
      }
    }
    return model;
  } catch (const json::exception& e) {
    throw std::runtime_error(origin + ": malformed model blob: " + e.what());
  }
}

FittedModel load_model(const std::string& path) {
  return parse_model_json(read_text_file(path), path);
}

}  // namespace windsentry

#include "windsentry/config.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "windsentry/csvutil.hpp"

namespace windsentry {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw std::runtime_error("config " + origin + ": " + what);
}

void expect_object(const json& j, const std::string& origin,
                   const std::string& key) {
  if (!j.is_object()) fail(origin, "'" + key + "' must be an object");
}

double get_num(const json& j, const std::string& origin,
               const std::string& key) {
  if (!j.is_number()) fail(origin, "'" + key + "' must be a number");
  return j.get<double>();
}

int get_int(const json& j, const std::string& origin, const std::string& key) {
  if (!j.is_number_integer()) fail(origin, "'" + key + "' must be an integer");
  return j.get<int>();
}

bool get_bool(const json& j, const std::string& origin,
              const std::string& key) {
  if (!j.is_boolean()) fail(origin, "'" + key + "' must be a boolean");
  return j.get<bool>();
}

void apply_turbine(TurbineConfig& t, const json& j, const std::string& origin) {
  expect_object(j, origin, "turbine");
  for (const auto& [key, value] : j.items()) {
    if (key == "rated_power_kw") t.rated_power_kw = get_num(value, origin, key);
    else if (key == "cut_in_mps") t.cut_in_mps = get_num(value, origin, key);
    else if (key == "cut_out_mps") t.cut_out_mps = get_num(value, origin, key);
    else if (key == "bin_width_mps") t.bin_width_mps = get_num(value, origin, key);
    else if (key == "quantile_lo") t.quantile_lo = get_num(value, origin, key);
    else if (key == "quantile_hi") t.quantile_hi = get_num(value, origin, key);
    else if (key == "outlier_margin") t.outlier_margin = get_num(value, origin, key);
    else if (key == "min_bin_count") t.min_bin_count = get_int(value, origin, key);
    else if (key == "status_exclusion_radius") t.status_exclusion_radius = get_int(value, origin, key);
    else if (key == "horizon_hours") t.horizon_hours = get_num(value, origin, key);
    else if (key == "alert_quantile") t.alert_quantile = get_num(value, origin, key);
    else if (key == "merge_gap_hours") t.merge_gap_hours = get_num(value, origin, key);
    else if (key == "min_window_coverage") t.min_window_coverage = get_num(value, origin, key);
    else if (key == "energy_price_per_mwh") t.energy_price_per_mwh = get_num(value, origin, key);
    else fail(origin, "unknown key 'turbine." + key + "'");
  }
}

void apply_gbm(GbmParams& g, const json& j, const std::string& origin) {
  expect_object(j, origin, "gbm");
  for (const auto& [key, value] : j.items()) {
    if (key == "n_stages") g.n_stages = get_int(value, origin, key);
    else if (key == "max_depth") g.max_depth = get_int(value, origin, key);
    else if (key == "learning_rate") g.learning_rate = get_num(value, origin, key);
    else if (key == "subsample") g.subsample = get_num(value, origin, key);
    else if (key == "min_leaf") g.min_leaf = get_int(value, origin, key);
    else fail(origin, "unknown key 'gbm." + key + "'");
  }
}

void apply_forest(ForestParams& f, const json& j, const std::string& origin) {
  expect_object(j, origin, "forest");
  for (const auto& [key, value] : j.items()) {
    if (key == "n_trees") f.n_trees = get_int(value, origin, key);
    else if (key == "min_leaf") f.min_leaf = get_int(value, origin, key);
    else if (key == "max_depth") f.max_depth = get_int(value, origin, key);
    else if (key == "mtry") f.mtry = get_int(value, origin, key);
    else if (key == "bootstrap") f.bootstrap = get_bool(value, origin, key);
    else fail(origin, "unknown key 'forest." + key + "'");
  }
}

void apply_knn(KnnParams& k, const json& j, const std::string& origin) {
  expect_object(j, origin, "knn");
  for (const auto& [key, value] : j.items()) {
    if (key == "k") k.k = get_int(value, origin, key);
    else fail(origin, "unknown key 'knn." + key + "'");
  }
}

}  // namespace

void PipelineConfig::validate() const {
  turbine.validate();
  if (!(split_ratio > 0.0 && split_ratio < 1.0)) {
    throw std::invalid_argument("split_ratio must be in (0, 1)");
  }
  if (gbm.n_stages < 1 || gbm.min_leaf < 1 || gbm.max_depth < 1) {
    throw std::invalid_argument("gbm: n_stages, max_depth, min_leaf must be >= 1");
  }
  if (!(gbm.learning_rate > 0.0) || !(gbm.subsample > 0.0 && gbm.subsample <= 1.0)) {
    throw std::invalid_argument("gbm: learning_rate > 0 and subsample in (0, 1] required");
  }
  if (forest.n_trees < 1 || forest.min_leaf < 1 || forest.max_depth < 0 ||
      forest.mtry < 0) {
    throw std::invalid_argument("forest: invalid tree parameters");
  }
  if (knn.k < 1) throw std::invalid_argument("knn: k must be >= 1");
}

void apply_config_text(PipelineConfig& cfg, const std::string& json_text,
                       const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(origin, std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) fail(origin, "top level must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "turbine") apply_turbine(cfg.turbine, value, origin);
    else if (key == "split_ratio") cfg.split_ratio = get_num(value, origin, key);
    else if (key == "gbm") apply_gbm(cfg.gbm, value, origin);
    else if (key == "forest") apply_forest(cfg.forest, value, origin);
    else if (key == "knn") apply_knn(cfg.knn, value, origin);
    else fail(origin, "unknown key '" + key + "'");
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    fail(origin, e.what());
  }
}

PipelineConfig load_config_file(const std::string& path) {
  PipelineConfig cfg;
  apply_config_text(cfg, read_text_file(path), path);
  return cfg;
}

std::string config_json(const PipelineConfig& cfg) {
  json j;
  j["turbine"] = {
      {"rated_power_kw", cfg.turbine.rated_power_kw},
      {"cut_in_mps", cfg.turbine.cut_in_mps},
      {"cut_out_mps", cfg.turbine.cut_out_mps},
      {"bin_width_mps", cfg.turbine.bin_width_mps},
      {"quantile_lo", cfg.turbine.quantile_lo},
      {"quantile_hi", cfg.turbine.quantile_hi},
      {"outlier_margin", cfg.turbine.outlier_margin},
      {"min_bin_count", cfg.turbine.min_bin_count},
      {"status_exclusion_radius", cfg.turbine.status_exclusion_radius},
      {"horizon_hours", cfg.turbine.horizon_hours},
      {"alert_quantile", cfg.turbine.alert_quantile},
      {"merge_gap_hours", cfg.turbine.merge_gap_hours},
      {"min_window_coverage", cfg.turbine.min_window_coverage},
      {"energy_price_per_mwh", cfg.turbine.energy_price_per_mwh},
  };
  j["split_ratio"] = cfg.split_ratio;
  j["gbm"] = {
      {"n_stages", cfg.gbm.n_stages},
      {"max_depth", cfg.gbm.max_depth},
      {"learning_rate", cfg.gbm.learning_rate},
      {"subsample", cfg.gbm.subsample},
      {"min_leaf", cfg.gbm.min_leaf},
  };
  j["forest"] = {
      {"n_trees", cfg.forest.n_trees},
      {"min_leaf", cfg.forest.min_leaf},
      {"max_depth", cfg.forest.max_depth},
      {"mtry", cfg.forest.mtry},
      {"bootstrap", cfg.forest.bootstrap},
  };
  j["knn"] = {{"k", cfg.knn.k}};
  return j.dump(2);
}

}  // namespace windsentry

#pragma once

#include <string>

#include "windsentry/model.hpp"
#include "windsentry/scada.hpp"

namespace windsentry {

// Everything tunable in one place. JSON config files overlay these
// defaults key by key; unknown keys are rejected so typos surface
// instead of silently reverting to defaults.
struct PipelineConfig {
  TurbineConfig turbine;
  double split_ratio = 0.7;
  GbmParams gbm;
  ForestParams forest;
  KnnParams knn;

  void validate() const;
};

// Parse a JSON config text and overlay it onto cfg. origin names the
// source (file path) for error messages. Throws std::runtime_error on
// malformed JSON, unknown keys, or wrong value types.
void apply_config_text(PipelineConfig& cfg, const std::string& json_text,
                       const std::string& origin);

// Defaults overlaid with the given file.
PipelineConfig load_config_file(const std::string& path);

// Effective config as pretty-printed JSON with sorted keys.
std::string config_json(const PipelineConfig& cfg);

}  // namespace windsentry

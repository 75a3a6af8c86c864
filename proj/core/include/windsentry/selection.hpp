#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "windsentry/config.hpp"
#include "windsentry/model.hpp"

namespace windsentry {

struct ReportRow {
  Algorithm algorithm;
  FeatureSet feature_set;
  double rmse_kw = 0.0;
  std::optional<double> r2;
};

struct ModelReport {
  // Sorted ascending by rmse; ties broken by algorithm order
  // gbm < random_forest < knn < bin_curve, then smaller feature set.
  std::vector<ReportRow> rows;
  std::size_t selected = 0;
  FittedModel model;  // the selected candidate with holdout metrics
  std::vector<std::string> skipped;  // candidates that failed to fit
};

// Seed a candidate fit gets inside select_model. A pure function of the
// run seed and the candidate's identity, never of fit order, which is
// what makes the selection invariant under candidate permutation.
std::uint64_t candidate_seed(std::uint64_t seed, Algorithm algorithm,
                             FeatureSet feature_set);

// Fit every algorithm x feature-set combination on one shared 70/30-style
// split and pick the lowest holdout RMSE. Each candidate gets its own
// seed via candidate_seed, so the outcome does not depend on fit order.
// Throws std::runtime_error when no candidate fits.
ModelReport select_model(const std::vector<ScadaRecord>& records,
                         const PipelineConfig& config, std::uint64_t seed);

// Table-style CSV: algorithm,feature_set,rmse_kw,r2
std::string report_csv_text(const ModelReport& report);

}  // namespace windsentry

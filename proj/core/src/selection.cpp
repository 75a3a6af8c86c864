#include "windsentry/selection.hpp"

#include <algorithm>
#include <stdexcept>

#include "windsentry/bin_curve.hpp"
#include "windsentry/csvutil.hpp"
#include "windsentry/forest.hpp"
#include "windsentry/gbm.hpp"
#include "windsentry/knn.hpp"
#include "windsentry/rng.hpp"

namespace windsentry {

namespace {

int algorithm_rank(Algorithm a) {
  switch (a) {
    case Algorithm::Gbm:
      return 0;
    case Algorithm::RandomForest:
      return 1;
    case Algorithm::Knn:
      return 2;
    case Algorithm::BinCurve:
      return 3;
  }
  return 4;
}

struct Candidate {
  ReportRow row;
  FittedModel model;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.row.rmse_kw != b.row.rmse_kw) return a.row.rmse_kw < b.row.rmse_kw;
  const int ra = algorithm_rank(a.row.algorithm);
  const int rb = algorithm_rank(b.row.algorithm);
  if (ra != rb) return ra < rb;
  return feature_dim(a.row.feature_set) < feature_dim(b.row.feature_set);
}

int feature_set_index(FeatureSet fs) {
  switch (fs) {
    case FeatureSet::V:
      return 0;
    case FeatureSet::VD:
      return 1;
    case FeatureSet::VDT:
      return 2;
  }
  return 3;
}

}  // namespace

std::uint64_t candidate_seed(std::uint64_t seed, Algorithm algorithm,
                             FeatureSet feature_set) {
  return mix_seed(seed,
                  static_cast<std::uint64_t>(algorithm_rank(algorithm)) + 1,
                  static_cast<std::uint64_t>(feature_set_index(feature_set)) + 1);
}

ModelReport select_model(const std::vector<ScadaRecord>& records,
                         const PipelineConfig& config, std::uint64_t seed) {
  const auto split =
      train_test_split(records.size(), config.split_ratio, seed);

  const FeatureSet fsets[] = {FeatureSet::V, FeatureSet::VD, FeatureSet::VDT};
  const Algorithm algos[] = {Algorithm::Gbm, Algorithm::RandomForest,
                             Algorithm::Knn, Algorithm::BinCurve};

  const auto y = extract_targets(records);
  const auto y_train = take(y, split.train);
  const auto y_test = take(y, split.test);

  std::vector<Candidate> candidates;
  ModelReport report;
  for (std::size_t fi = 0; fi < 3; ++fi) {
    const Matrix x = build_feature_matrix(records, fsets[fi]);
    const Matrix x_train = take_rows(x, split.train);
    const Matrix x_test = take_rows(x, split.test);
    for (const Algorithm algo : algos) {
      const std::uint64_t cand_seed = candidate_seed(seed, algo, fsets[fi]);
      try {
        FittedModel model;
        switch (algo) {
          case Algorithm::Gbm:
            model = fit_gbm(x_train, y_train, config.gbm, cand_seed, fsets[fi],
                            config.turbine.rated_power_kw);
            break;
          case Algorithm::RandomForest:
            model = fit_random_forest(x_train, y_train, config.forest,
                                      cand_seed, fsets[fi],
                                      config.turbine.rated_power_kw);
            break;
          case Algorithm::Knn:
            model = fit_knn(x_train, y_train, config.knn, cand_seed, fsets[fi],
                            config.turbine.rated_power_kw);
            break;
          case Algorithm::BinCurve:
            model = fit_bin_curve(x_train, y_train,
                                  config.turbine.bin_width_mps, fsets[fi],
                                  config.turbine.rated_power_kw);
            break;
        }
        const Evaluation ev = evaluate(model, x_test, y_test);
        model.holdout_rmse = ev.rmse;
        model.holdout_r2 = ev.r2;
        Candidate c;
        c.row = {algo, fsets[fi], ev.rmse, ev.r2};
        c.model = std::move(model);
        candidates.push_back(std::move(c));
      } catch (const std::exception& e) {
        report.skipped.push_back(std::string(algorithm_name(algo)) + "/" +
                                 feature_set_name(fsets[fi]) + ": " + e.what());
      }
    }
  }
  if (candidates.empty()) {
    std::string msg = "select_model: every candidate failed";
    for (const auto& s : report.skipped) msg += "; " + s;
    throw std::runtime_error(msg);
  }
  std::sort(candidates.begin(), candidates.end(), candidate_less);
  for (const auto& c : candidates) report.rows.push_back(c.row);
  report.selected = 0;
  report.model = std::move(candidates.front().model);
  return report;
}

std::string report_csv_text(const ModelReport& report) {
  std::string out = "algorithm,feature_set,rmse_kw,r2\n";
  for (const auto& row : report.rows) {
    out += algorithm_name(row.algorithm);
    out += ',';
    out += feature_set_name(row.feature_set);
    out += ',';
    out += format_double(row.rmse_kw);
    out += ',';
    out += row.r2 ? format_double(*row.r2) : "nan";
    out += '\n';
  }
  return out;
}

}  // namespace windsentry

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace windsentry::cli {

// Shared by every subcommand. Flag values override config-file values,
// which override built-in defaults.
struct CommonArgs {
  std::string config_path;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
};

struct SimulateArgs {
  CommonArgs common;
  std::string scenario_path;
  bool seed_given = false;  // --seed overrides the scenario seed
};

struct CleanArgs {
  CommonArgs common;
  std::string input_path;
};

struct TrainArgs {
  CommonArgs common;
  std::string input_path;
  std::optional<double> split_ratio;
};

struct MonitorArgs {
  CommonArgs common;
  std::string input_path;
  std::string model_path;
  std::string reference_path;          // threshold from this fault-free csv
  std::optional<double> threshold_mwh; // or fixed threshold
  std::optional<double> alert_quantile;
};

struct DiagnoseArgs {
  CommonArgs common;
  std::string input_path;
  std::string events_path;
};

struct ReportArgs {
  CommonArgs common;
  std::string residuals_path;
  std::string events_path;
  std::string bands_path;
  std::string diagnosis_path;  // optional
};

int cmd_simulate(const SimulateArgs& args);
int cmd_clean(const CleanArgs& args);
int cmd_train(const TrainArgs& args);
int cmd_monitor(const MonitorArgs& args);
int cmd_diagnose(const DiagnoseArgs& args);
int cmd_report(const ReportArgs& args);

}  // namespace windsentry::cli

#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "commands.hpp"
#include "windsentry/version.hpp"

namespace cli = windsentry::cli;

namespace {

void add_common(CLI::App* cmd, cli::CommonArgs& common) {
  cmd->add_option("--config", common.config_path,
                  "JSON config overlaying the built-in defaults");
  cmd->add_option("--seed", common.seed, "base seed for anything random");
  cmd->add_option("--out", common.out_dir, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wind turbine SCADA underperformance toolkit"};
  app.set_version_flag("--version", windsentry::kVersion);
  app.require_subcommand(1);

  cli::SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "generate a synthetic SCADA year");
  add_common(c_sim, sim.common);
  c_sim->add_option("--scenario", sim.scenario_path, "scenario JSON")
      ->required();

  cli::CleanArgs cln;
  auto* c_cln = app.add_subcommand("clean", "status filter and outlier removal");
  add_common(c_cln, cln.common);
  c_cln->add_option("--input", cln.input_path, "raw SCADA csv")->required();

  cli::TrainArgs trn;
  auto* c_trn = app.add_subcommand("train", "fit candidates and select a model");
  add_common(c_trn, trn.common);
  c_trn->add_option("--input", trn.input_path, "clean SCADA csv")->required();
  c_trn->add_option("--split-ratio", trn.split_ratio,
                    "training fraction, overrides the config");

  cli::MonitorArgs mon;
  auto* c_mon = app.add_subcommand("monitor", "rolling residuals and events");
  add_common(c_mon, mon.common);
  c_mon->add_option("--input", mon.input_path, "monitored SCADA csv")
      ->required();
  c_mon->add_option("--model", mon.model_path, "model blob from train")
      ->required();
  c_mon->add_option("--reference", mon.reference_path,
                    "fault-free SCADA csv to derive the threshold from");
  c_mon->add_option("--threshold", mon.threshold_mwh,
                    "fixed alert threshold in MWh");
  c_mon->add_option("--alert-quantile", mon.alert_quantile,
                    "tail probability for the derived threshold");

  cli::DiagnoseArgs dgn;
  auto* c_dgn = app.add_subcommand("diagnose", "per-event channel analysis");
  add_common(c_dgn, dgn.common);
  c_dgn->add_option("--input", dgn.input_path, "monitored SCADA csv")
      ->required();
  c_dgn->add_option("--events", dgn.events_path, "events json from monitor")
      ->required();

  cli::ReportArgs rpt;
  auto* c_rpt = app.add_subcommand("report", "figures from stage outputs");
  add_common(c_rpt, rpt.common);
  c_rpt->add_option("--bands", rpt.bands_path, "bands csv from clean")
      ->required();
  c_rpt->add_option("--residuals", rpt.residuals_path,
                    "residuals csv from monitor")
      ->required();
  c_rpt->add_option("--events", rpt.events_path, "events json from monitor")
      ->required();
  c_rpt->add_option("--diagnosis", rpt.diagnosis_path,
                    "diagnosis json from diagnose");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_sim) {
      sim.seed_given = c_sim->count("--seed") > 0;
      return cli::cmd_simulate(sim);
    }
    if (*c_cln) return cli::cmd_clean(cln);
    if (*c_trn) return cli::cmd_train(trn);
    if (*c_mon) return cli::cmd_monitor(mon);
    if (*c_dgn) return cli::cmd_diagnose(dgn);
    if (*c_rpt) return cli::cmd_report(rpt);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "windsentry: %s\n", e.what());
    return 1;
  }
  return 0;
}

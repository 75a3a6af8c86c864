#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "svg.hpp"
#include "windsentry/config.hpp"
#include "windsentry/csvutil.hpp"
#include "windsentry/diagnose.hpp"
#include "windsentry/ingest.hpp"
#include "windsentry/manifest.hpp"
#include "windsentry/model_io.hpp"
#include "windsentry/monitor.hpp"
#include "windsentry/monitor_io.hpp"
#include "windsentry/preprocess.hpp"
#include "windsentry/selection.hpp"
#include "windsentry/simulator.hpp"
#include "windsentry/timeparse.hpp"
#include "windsentry/version.hpp"

namespace fs = std::filesystem;

namespace windsentry::cli {

namespace {

PipelineConfig effective_config(const CommonArgs& common) {
  PipelineConfig cfg;
  if (!common.config_path.empty()) {
    cfg = load_config_file(common.config_path);
  }
  return cfg;
}

std::string out_path(const CommonArgs& common, const std::string& name) {
  fs::create_directories(common.out_dir);
  return (fs::path(common.out_dir) / name).string();
}

void emit_manifest(const CommonArgs& common, const std::string& command,
                   std::uint64_t seed, const std::string& config_json_text,
                   const std::vector<std::string>& input_paths,
                   const std::vector<std::string>& output_paths) {
  RunManifest m;
  m.command = command;
  m.version = kVersion;
  m.seed = seed;
  m.config_json = config_json_text;
  for (const auto& p : input_paths) m.inputs.push_back(digest_file(p));
  for (const auto& p : output_paths) m.outputs.push_back(digest_file(p));
  write_manifest(out_path(common, command + ".manifest.json"), m);
}

std::string mwh(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

int cmd_simulate(const SimulateArgs& args) {
  // The scenario drives everything here, but a broken --config should
  // still fail loudly instead of being silently ignored.
  effective_config(args.common);
  Scenario scenario = load_scenario(args.scenario_path);
  if (args.seed_given) scenario.seed = args.common.seed;
  const SimOutput out = generate(scenario);

  const std::string scada_path = out_path(args.common, "scada.csv");
  const std::string truth_path = out_path(args.common, "scada.truth.csv");
  write_scada_csv(scada_path, out.records);
  write_truth_csv(truth_path, out.truth);
  emit_manifest(args.common, "simulate", scenario.seed,
                scenario_json_text(scenario), {args.scenario_path},
                {scada_path, truth_path});
  std::printf("simulate: %zu records, %zu truth rows\n", out.records.size(),
              out.truth.size());
  return 0;
}

int cmd_clean(const CleanArgs& args) {
  const PipelineConfig cfg = effective_config(args.common);
  const ParseResult parsed = parse_scada_csv(args.input_path, cfg.turbine);
  const CleanResult result = windsentry::clean(parsed.records, cfg.turbine);

  const std::string clean_path = out_path(args.common, "clean.csv");
  const std::string bands_path = out_path(args.common, "bands.csv");
  const std::string rejects_name =
      fs::path(args.input_path).stem().string() + ".rejects.csv";
  const std::string rejects_path = out_path(args.common, rejects_name);

  write_scada_csv(clean_path, result.clean);
  write_bands_csv(bands_path, result.bands);
  write_rejects_csv(rejects_path, parsed.rejects);
  emit_manifest(args.common, "clean", args.common.seed, config_json(cfg),
                {args.input_path}, {clean_path, bands_path, rejects_path});
  std::printf(
      "clean: kept %zu of %zu rows (%zu status-filtered, %zu outliers, "
      "%zu malformed)\n",
      result.clean.size(), parsed.records.size(), result.status_removed,
      result.removed.size(), parsed.rejects.size());
  return 0;
}

int cmd_train(const TrainArgs& args) {
  PipelineConfig cfg = effective_config(args.common);
  if (args.split_ratio) cfg.split_ratio = *args.split_ratio;
  const ParseResult parsed = parse_scada_csv(args.input_path, cfg.turbine);
  const ModelReport report =
      select_model(parsed.records, cfg, args.common.seed);

  const std::string model_path = out_path(args.common, "model.json");
  const std::string report_path = out_path(args.common, "report.csv");
  save_model(model_path, report.model);
  write_text_file(report_path, report_csv_text(report));
  emit_manifest(args.common, "train", args.common.seed, config_json(cfg),
                {args.input_path}, {model_path, report_path});
  for (const auto& why : report.skipped) {
    std::fprintf(stderr, "train: skipped %s\n", why.c_str());
  }
  std::printf("train: selected %s on %s, holdout rmse %s kW\n",
              algorithm_name(report.model.algorithm),
              feature_set_name(report.model.feature_set),
              mwh(report.model.holdout_rmse).c_str());
  return 0;
}

int cmd_monitor(const MonitorArgs& args) {
  PipelineConfig cfg = effective_config(args.common);
  if (args.alert_quantile) cfg.turbine.alert_quantile = *args.alert_quantile;
  cfg.turbine.validate();
  const FittedModel model = load_model(args.model_path);
  const ParseResult parsed = parse_scada_csv(args.input_path, cfg.turbine);
  const std::vector<double> expected =
      predict_expected(model, parsed.records);
  const ResidualSeries series =
      rolling_energy_residual(parsed.records, expected, cfg.turbine);

  double threshold = 0.0;
  if (args.threshold_mwh) {
    threshold = *args.threshold_mwh;
  } else if (!args.reference_path.empty()) {
    const ParseResult ref = parse_scada_csv(args.reference_path, cfg.turbine);
    const ResidualSeries ref_series = rolling_energy_residual(
        ref.records, predict_expected(model, ref.records), cfg.turbine);
    threshold =
        derive_threshold(valid_residuals(ref_series), cfg.turbine.alert_quantile);
  } else {
    threshold =
        derive_threshold(valid_residuals(series), cfg.turbine.alert_quantile);
  }
  const EventDetection detection =
      detect_events(series, threshold, cfg.turbine);

  const std::string residuals_path = out_path(args.common, "residuals.csv");
  const std::string events_path = out_path(args.common, "events.json");
  write_residuals_csv(residuals_path, series);
  write_events_json(events_path, detection);

  std::vector<std::string> inputs = {args.input_path, args.model_path};
  if (!args.reference_path.empty()) inputs.push_back(args.reference_path);
  emit_manifest(args.common, "monitor", args.common.seed, config_json(cfg),
                inputs, {residuals_path, events_path});
  std::printf("monitor: threshold %s MWh, %zu events, %zu overperformance\n",
              mwh(detection.threshold_mwh).c_str(), detection.events.size(),
              detection.overperformance.size());
  return 0;
}

int cmd_diagnose(const DiagnoseArgs& args) {
  const PipelineConfig cfg = effective_config(args.common);
  const ParseResult parsed = parse_scada_csv(args.input_path, cfg.turbine);
  const EventDetection detection = parse_events_json(args.events_path);

  std::vector<EventDiagnosis> reports;
  for (const auto& event : detection.events) {
    reports.push_back(diagnose_event(event, parsed.records, cfg.turbine));
  }
  const std::string diagnosis_path = out_path(args.common, "diagnosis.json");
  write_diagnosis_json(diagnosis_path, reports);
  emit_manifest(args.common, "diagnose", args.common.seed, config_json(cfg),
                {args.input_path, args.events_path}, {diagnosis_path});
  std::printf("diagnose: %zu events examined\n", reports.size());
  return 0;
}

namespace {

// Figures are emitted as SVG plus the CSV that feeds them, so tests can
// check the data without rasterizing anything.

void fig_power_curve(const ReportArgs& args, const BinQuantiles& bands,
                     std::vector<std::string>& outputs) {
  std::string csv = "bin_center_mps,q_lo_kw,median_kw,q_hi_kw,count\n";
  std::vector<std::pair<double, double>> lo, med, hi;
  double max_speed = 1.0, max_power = 1.0;
  for (const auto& bin : bands.bins) {
    if (bin.count == 0) continue;
    const double center = bin.lo + (bin.hi - bin.lo) / 2.0;
    csv += format_double(center) + "," + format_double(bin.q_lo_kw) + "," +
           format_double(bin.median_kw) + "," + format_double(bin.q_hi_kw) +
           "," + std::to_string(bin.count) + "\n";
    max_speed = std::max(max_speed, bin.hi);
    max_power = std::max(max_power, bin.q_hi_kw);
  }
  svg::Canvas canvas(640, 400);
  svg::Frame frame;
  frame.x1 = max_speed;
  frame.y0 = -100.0;
  frame.y1 = max_power * 1.05;
  frame.axes(canvas, "wind speed (m/s)", "power (kW)");
  for (const auto& bin : bands.bins) {
    if (bin.count == 0) continue;
    const double center = bin.lo + (bin.hi - bin.lo) / 2.0;
    lo.emplace_back(frame.mx(center), frame.my(bin.q_lo_kw));
    med.emplace_back(frame.mx(center), frame.my(bin.median_kw));
    hi.emplace_back(frame.mx(center), frame.my(bin.q_hi_kw));
  }
  canvas.polyline(lo, "steelblue", 1.0, "4,3");
  canvas.polyline(hi, "steelblue", 1.0, "4,3");
  canvas.polyline(med, "black", 2.0);
  canvas.text(320, 14, "binned power curve: median and outer quantiles", 12,
              "middle");
  const std::string base = "fig1_power_curve";
  const std::string csv_path = out_path(args.common, base + ".csv");
  const std::string svg_path = out_path(args.common, base + ".svg");
  write_text_file(csv_path, csv);
  write_text_file(svg_path, canvas.str());
  outputs.push_back(csv_path);
  outputs.push_back(svg_path);
}

void fig_scatter(const ReportArgs& args, const ResidualSeries& series,
                 double rated_mw, std::vector<std::string>& outputs) {
  std::vector<double> expected_mw, actual_mw;
  for (const auto& pt : series.points) {
    if (!pt.present) continue;
    expected_mw.push_back(pt.expected_kw / 1000.0);
    actual_mw.push_back(pt.power_kw / 1000.0);
  }
  std::vector<double> sorted_expected = expected_mw;
  std::vector<double> sorted_actual = actual_mw;
  std::sort(sorted_expected.begin(), sorted_expected.end());
  std::sort(sorted_actual.begin(), sorted_actual.end());

  std::string csv = "expected_mw,actual_mw,sorted_expected_mw,sorted_actual_mw\n";
  for (std::size_t i = 0; i < expected_mw.size(); ++i) {
    csv += format_double(expected_mw[i]) + "," + format_double(actual_mw[i]) +
           "," + format_double(sorted_expected[i]) + "," +
           format_double(sorted_actual[i]) + "\n";
  }

  svg::Canvas canvas(980, 420);
  svg::Frame scatter;
  scatter.px = 60;
  scatter.pw = 380;
  scatter.ph = 330;
  scatter.x0 = 0.0;
  scatter.x1 = rated_mw;  // axes span [0, rated] MW
  scatter.y0 = 0.0;
  scatter.y1 = rated_mw;
  scatter.axes(canvas, "expected power (MW)", "actual power (MW)");
  const std::size_t stride = std::max<std::size_t>(1, expected_mw.size() / 2000);
  for (std::size_t i = 0; i < expected_mw.size(); i += stride) {
    canvas.circle(scatter.mx(expected_mw[i]), scatter.my(actual_mw[i]), 1.5,
                  "steelblue", 0.35);
  }
  canvas.line(scatter.mx(0), scatter.my(0), scatter.mx(rated_mw),
              scatter.my(rated_mw), "gray", 1.0, "5,4");

  svg::Frame qq;
  qq.px = 540;
  qq.pw = 380;
  qq.ph = 330;
  qq.x0 = 0.0;
  qq.x1 = rated_mw;
  qq.y0 = 0.0;
  qq.y1 = rated_mw;
  qq.axes(canvas, "expected quantiles (MW)", "actual quantiles (MW)");
  std::vector<std::pair<double, double>> qline;
  for (std::size_t i = 0; i < sorted_expected.size(); i += stride) {
    qline.emplace_back(qq.mx(sorted_expected[i]), qq.my(sorted_actual[i]));
  }
  canvas.polyline(qline, "darkorange", 1.5);
  canvas.line(qq.mx(0), qq.my(0), qq.mx(rated_mw), qq.my(rated_mw), "gray",
              1.0, "5,4");
  canvas.text(250, 14, "actual vs expected", 12, "middle");
  canvas.text(730, 14, "quantile-quantile", 12, "middle");

  const std::string csv_path = out_path(args.common, "fig2_scatter.csv");
  const std::string svg_path = out_path(args.common, "fig2_scatter.svg");
  write_text_file(csv_path, csv);
  write_text_file(svg_path, canvas.str());
  outputs.push_back(csv_path);
  outputs.push_back(svg_path);
}

void fig_residuals(const ReportArgs& args, const ResidualSeries& series,
                   const EventDetection& detection,
                   std::vector<std::string>& outputs) {
  std::string csv = "timestamp,rolling_residual_mwh,valid\n";
  std::vector<double> values;
  double lo = 0.0, hi = 0.0;
  for (const auto& pt : series.points) {
    if (!pt.present) continue;
    csv += format_iso8601_utc(pt.timestamp) + ",";
    if (pt.valid) {
      csv += format_double(pt.rolling_residual_mwh);
      values.push_back(pt.rolling_residual_mwh);
      lo = std::min(lo, pt.rolling_residual_mwh);
      hi = std::max(hi, pt.rolling_residual_mwh);
    }
    csv += pt.valid ? ",1\n" : ",0\n";
  }

  svg::Canvas canvas(980, 420);
  svg::Frame ts;
  ts.px = 60;
  ts.pw = 540;
  ts.ph = 330;
  const double pad = std::max(1.0, (hi - lo) * 0.05);
  ts.y0 = lo - pad;
  ts.y1 = hi + pad;
  ts.x0 = 0.0;
  ts.x1 = std::max<double>(1.0, values.size());
  ts.axes(canvas, "valid window index", "rolling residual (MWh)");
  std::vector<std::pair<double, double>> line;
  line.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    line.emplace_back(ts.mx(static_cast<double>(i)), ts.my(values[i]));
  }
  canvas.polyline(line, "steelblue", 1.0);
  canvas.line(ts.mx(ts.x0), ts.my(-detection.threshold_mwh), ts.mx(ts.x1),
              ts.my(-detection.threshold_mwh), "crimson", 1.0, "6,4");

  svg::Frame histf;
  histf.px = 680;
  histf.pw = 260;
  histf.ph = 330;
  const int nbins = 40;
  std::vector<int> hist(nbins, 0);
  int peak = 1;
  if (!values.empty() && hi > lo) {
    for (double v : values) {
      int b = static_cast<int>((v - lo) / (hi - lo) * nbins);
      b = std::clamp(b, 0, nbins - 1);
      peak = std::max(peak, ++hist[b]);
    }
  }
  histf.x0 = lo;
  histf.x1 = std::max(hi, lo + 1.0);
  histf.y0 = 0.0;
  histf.y1 = peak;
  histf.axes(canvas, "rolling residual (MWh)", "count", 4);
  for (int b = 0; b < nbins; ++b) {
    if (hist[b] == 0) continue;
    const double x0 = lo + (histf.x1 - lo) * b / nbins;
    const double x1 = lo + (histf.x1 - lo) * (b + 1) / nbins;
    canvas.rect(histf.mx(x0), histf.my(hist[b]), histf.mx(x1) - histf.mx(x0),
                histf.my(0) - histf.my(hist[b]), "steelblue", 0.8);
  }
  canvas.text(330, 14, "24 h rolling energy residual", 12, "middle");
  canvas.text(810, 14, "distribution", 12, "middle");

  const std::string csv_path = out_path(args.common, "fig3_residuals.csv");
  const std::string svg_path = out_path(args.common, "fig3_residuals.svg");
  write_text_file(csv_path, csv);
  write_text_file(svg_path, canvas.str());
  outputs.push_back(csv_path);
  outputs.push_back(svg_path);
}

void placeholder(const ReportArgs& args, const std::string& base,
                 const std::string& header, const std::string& note,
                 std::vector<std::string>& outputs) {
  svg::Canvas canvas(640, 200);
  canvas.text(320, 100, note, 14, "middle");
  const std::string csv_path = out_path(args.common, base + ".csv");
  const std::string svg_path = out_path(args.common, base + ".svg");
  write_text_file(csv_path, header + "\n");
  write_text_file(svg_path, canvas.str());
  outputs.push_back(csv_path);
  outputs.push_back(svg_path);
}

void fig_event_detail(const ReportArgs& args, const ResidualSeries& series,
                      const EventDetection& detection,
                      std::vector<std::string>& outputs) {
  const std::string header4 = "timestamp,rolling_residual_mwh,valid";
  const std::string header5 = "timestamp,power_kw,expected_kw";
  if (detection.events.empty()) {
    placeholder(args, "fig4_event_timeline", header4, "no events detected",
                outputs);
    placeholder(args, "fig5_event_power", header5, "no events detected",
                outputs);
    return;
  }
  const auto& event = detection.events.front();
  const std::int64_t lo = event.start - 86400;
  const std::int64_t hi = event.alert_end + 86400;

  std::string csv4 = header4 + "\n";
  std::string csv5 = header5 + "\n";
  std::vector<const ResidualPoint*> window;
  for (const auto& pt : series.points) {
    if (pt.timestamp < lo || pt.timestamp > hi || !pt.present) continue;
    window.push_back(&pt);
    csv4 += format_iso8601_utc(pt.timestamp) + ",";
    if (pt.valid) csv4 += format_double(pt.rolling_residual_mwh);
    csv4 += pt.valid ? ",1\n" : ",0\n";
    csv5 += format_iso8601_utc(pt.timestamp) + "," +
            format_double(pt.power_kw) + "," + format_double(pt.expected_kw) +
            "\n";
  }
  if (window.empty()) {
    placeholder(args, "fig4_event_timeline", header4,
                "event lies outside the residual series", outputs);
    placeholder(args, "fig5_event_power", header5,
                "event lies outside the residual series", outputs);
    return;
  }

  {
    svg::Canvas canvas(760, 400);
    svg::Frame frame;
    frame.pw = 640;
    double rlo = 0.0, rhi = 0.0;
    for (const auto* pt : window) {
      if (!pt->valid) continue;
      rlo = std::min(rlo, pt->rolling_residual_mwh);
      rhi = std::max(rhi, pt->rolling_residual_mwh);
    }
    frame.y0 = rlo - 1.0;
    frame.y1 = rhi + 1.0;
    frame.x0 = static_cast<double>(lo);
    frame.x1 = static_cast<double>(hi);
    frame.axes(canvas, "unix time (s)", "rolling residual (MWh)", 4);
    canvas.rect(frame.mx(static_cast<double>(event.start)), frame.py,
                frame.mx(static_cast<double>(event.end)) -
                    frame.mx(static_cast<double>(event.start)),
                frame.ph, "mistyrose", 0.8);
    std::vector<std::pair<double, double>> line;
    for (const auto* pt : window) {
      if (!pt->valid) continue;
      line.emplace_back(frame.mx(static_cast<double>(pt->timestamp)),
                        frame.my(pt->rolling_residual_mwh));
    }
    canvas.polyline(line, "steelblue", 1.5);
    canvas.line(frame.mx(frame.x0), frame.my(-detection.threshold_mwh),
                frame.mx(frame.x1), frame.my(-detection.threshold_mwh),
                "crimson", 1.0, "6,4");
    canvas.text(380, 14, "first event: rolling residual and alert threshold",
                12, "middle");
    const std::string csv_path =
        out_path(args.common, "fig4_event_timeline.csv");
    const std::string svg_path =
        out_path(args.common, "fig4_event_timeline.svg");
    write_text_file(csv_path, csv4);
    write_text_file(svg_path, canvas.str());
    outputs.push_back(csv_path);
    outputs.push_back(svg_path);
  }
  {
    svg::Canvas canvas(760, 400);
    svg::Frame frame;
    frame.pw = 640;
    double pmax = 1.0;
    for (const auto* pt : window) {
      pmax = std::max({pmax, pt->power_kw, pt->expected_kw});
    }
    frame.y0 = -100.0;
    frame.y1 = pmax * 1.05;
    frame.x0 = static_cast<double>(lo);
    frame.x1 = static_cast<double>(hi);
    frame.axes(canvas, "unix time (s)", "power (kW)", 4);
    canvas.rect(frame.mx(static_cast<double>(event.start)), frame.py,
                frame.mx(static_cast<double>(event.end)) -
                    frame.mx(static_cast<double>(event.start)),
                frame.ph, "mistyrose", 0.8);
    std::vector<std::pair<double, double>> actual, expected;
    for (const auto* pt : window) {
      actual.emplace_back(frame.mx(static_cast<double>(pt->timestamp)),
                          frame.my(pt->power_kw));
      expected.emplace_back(frame.mx(static_cast<double>(pt->timestamp)),
                            frame.my(pt->expected_kw));
    }
    canvas.polyline(expected, "darkorange", 1.5);
    canvas.polyline(actual, "steelblue", 1.0);
    canvas.text(380, 14, "first event: actual (blue) vs expected (orange)",
                12, "middle");
    const std::string csv_path = out_path(args.common, "fig5_event_power.csv");
    const std::string svg_path = out_path(args.common, "fig5_event_power.svg");
    write_text_file(csv_path, csv5);
    write_text_file(svg_path, canvas.str());
    outputs.push_back(csv_path);
    outputs.push_back(svg_path);
  }
}

void fig_pitch(const ReportArgs& args,
               const std::vector<EventDiagnosis>& reports,
               std::vector<std::string>& outputs) {
  const std::string header =
      "bin_lo_mps,bin_hi_mps,ref_q05_deg,ref_median_deg,ref_q95_deg,"
      "event_median_deg,outside_band";
  if (reports.empty() || reports.front().pitch_table.empty()) {
    placeholder(args, "fig6_pitch_comparison", header,
                "no diagnosed events", outputs);
    return;
  }
  const auto& table = reports.front().pitch_table;
  std::string csv = header + "\n";
  double max_speed = 1.0, plo = 0.0, phi = 1.0;
  for (const auto& row : table) {
    csv += format_double(row.bin_lo) + "," + format_double(row.bin_hi) + "," +
           format_double(row.ref_q05) + "," + format_double(row.ref_median) +
           "," + format_double(row.ref_q95) + "," +
           format_double(row.event_median) + "," +
           (row.outside_band ? "1" : "0") + "\n";
    max_speed = std::max(max_speed, row.bin_hi);
    plo = std::min({plo, row.ref_q05, row.event_median});
    phi = std::max({phi, row.ref_q95, row.event_median});
  }
  svg::Canvas canvas(640, 400);
  svg::Frame frame;
  frame.x1 = max_speed;
  frame.y0 = plo - 0.5;
  frame.y1 = phi + 0.5;
  frame.axes(canvas, "wind speed (m/s)", "pitch angle (deg)");
  std::vector<std::pair<double, double>> lo, med, hi, ev;
  for (const auto& row : table) {
    const double center = row.bin_lo + (row.bin_hi - row.bin_lo) / 2.0;
    lo.emplace_back(frame.mx(center), frame.my(row.ref_q05));
    med.emplace_back(frame.mx(center), frame.my(row.ref_median));
    hi.emplace_back(frame.mx(center), frame.my(row.ref_q95));
    ev.emplace_back(frame.mx(center), frame.my(row.event_median));
  }
  canvas.polyline(lo, "gray", 1.0, "4,3");
  canvas.polyline(hi, "gray", 1.0, "4,3");
  canvas.polyline(med, "black", 1.5);
  canvas.polyline(ev, "crimson", 1.5);
  for (const auto& row : table) {
    if (!row.outside_band) continue;
    const double center = row.bin_lo + (row.bin_hi - row.bin_lo) / 2.0;
    canvas.circle(frame.mx(center), frame.my(row.event_median), 3.0,
                  "crimson");
  }
  canvas.text(320, 14, "event pitch (red) vs reference band", 12, "middle");
  const std::string csv_path =
      out_path(args.common, "fig6_pitch_comparison.csv");
  const std::string svg_path =
      out_path(args.common, "fig6_pitch_comparison.svg");
  write_text_file(csv_path, csv);
  write_text_file(svg_path, canvas.str());
  outputs.push_back(csv_path);
  outputs.push_back(svg_path);
}

}  // namespace

int cmd_report(const ReportArgs& args) {
  const PipelineConfig cfg = effective_config(args.common);
  const BinQuantiles bands = parse_bands_csv(args.bands_path);
  const ResidualSeries series = parse_residuals_csv(args.residuals_path);
  const EventDetection detection = parse_events_json(args.events_path);
  std::vector<EventDiagnosis> reports;
  if (!args.diagnosis_path.empty()) {
    reports = parse_diagnosis_json(args.diagnosis_path);
  }

  std::vector<std::string> outputs;
  fig_power_curve(args, bands, outputs);
  fig_scatter(args, series, cfg.turbine.rated_power_kw / 1000.0, outputs);
  fig_residuals(args, series, detection, outputs);
  fig_event_detail(args, series, detection, outputs);
  fig_pitch(args, reports, outputs);

  std::vector<std::string> inputs = {args.bands_path, args.residuals_path,
                                     args.events_path};
  if (!args.diagnosis_path.empty()) inputs.push_back(args.diagnosis_path);
  emit_manifest(args.common, "report", args.common.seed, config_json(cfg),
                inputs, outputs);
  std::printf("report: %zu figure files\n", outputs.size());
  return 0;
}

}  // namespace windsentry::cli

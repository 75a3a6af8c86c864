#include "windsentry/monitor_io.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "windsentry/csvutil.hpp"
#include "windsentry/timeparse.hpp"

namespace windsentry {

namespace {
using nlohmann::json;
constexpr const char* kResidualHeader =
    "timestamp,power_kw,expected_kw,rolling_residual_mwh,valid";
}  // namespace

std::string residuals_csv_text(const ResidualSeries& series) {
  std::string out = kResidualHeader;
  out += '\n';
  for (const auto& pt : series.points) {
    if (!pt.present) continue;
    out += format_iso8601_utc(pt.timestamp);
    out += ',';
    out += format_double(pt.power_kw);
    out += ',';
    out += format_double(pt.expected_kw);
    out += ',';
    if (pt.valid) out += format_double(pt.rolling_residual_mwh);
    out += ',';
    out += pt.valid ? '1' : '0';
    out += '\n';
  }
  return out;
}

void write_residuals_csv(const std::string& path,
                         const ResidualSeries& series) {
  write_text_file(path, residuals_csv_text(series));
}

ResidualSeries parse_residuals_csv(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty() || lines[0] != kResidualHeader) {
    throw std::runtime_error(path + ": not a residuals csv");
  }
  struct Row {
    std::int64_t ts;
    double power, expected, rolling;
    bool valid;
  };
  std::vector<Row> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split_csv_line(lines[i]);
    if (f.size() != 5) throw std::runtime_error(path + ": bad residual row");
    const auto ts = parse_iso8601_utc(f[0]);
    const auto power = parse_double(f[1]);
    const auto expected = parse_double(f[2]);
    const auto valid = parse_int(f[4]);
    if (!ts || !power || !expected || !valid) {
      throw std::runtime_error(path + ": bad residual row");
    }
    Row row{*ts, *power, *expected, 0.0, *valid != 0};
    if (row.valid) {
      const auto rolling = parse_double(f[3]);
      if (!rolling) throw std::runtime_error(path + ": bad residual row");
      row.rolling = *rolling;
    }
    rows.push_back(row);
  }
  ResidualSeries series;
  if (rows.empty()) return series;
  const std::int64_t t0 = rows.front().ts;
  const std::int64_t t1 = rows.back().ts;
  series.points.resize(static_cast<std::size_t>((t1 - t0) / kStepSeconds) + 1);
  for (std::size_t g = 0; g < series.points.size(); ++g) {
    series.points[g].timestamp =
        t0 + static_cast<std::int64_t>(g) * kStepSeconds;
  }
  for (const Row& row : rows) {
    auto& pt =
        series.points[static_cast<std::size_t>((row.ts - t0) / kStepSeconds)];
    pt.present = true;
    pt.power_kw = row.power;
    pt.expected_kw = row.expected;
    pt.step_energy_kwh = row.power / 6.0;
    pt.step_expected_kwh = row.expected / 6.0;
    pt.valid = row.valid;
    pt.rolling_residual_mwh = row.rolling;
  }
  return series;
}

std::string events_json_text(const EventDetection& detection) {
  json j;
  j["alert_quantile"] = detection.alert_quantile;
  j["threshold_mwh"] = detection.threshold_mwh;
  json events = json::array();
  for (const auto& ev : detection.events) {
    events.push_back({
        {"start", format_iso8601_utc(ev.start)},
        {"end", format_iso8601_utc(ev.end)},
        {"alert_start", format_iso8601_utc(ev.alert_start)},
        {"alert_end", format_iso8601_utc(ev.alert_end)},
        {"peak_deficit_mwh", ev.peak_deficit_mwh},
        {"lost_energy_mwh", ev.lost_energy_mwh},
        {"opportunity_cost", ev.opportunity_cost},
    });
  }
  j["events"] = std::move(events);
  json flags = json::array();
  for (const auto& flag : detection.overperformance) {
    flags.push_back({
        {"start", format_iso8601_utc(flag.start)},
        {"end", format_iso8601_utc(flag.end)},
        {"peak_mwh", flag.peak_mwh},
    });
  }
  j["overperformance_flags"] = std::move(flags);
  return j.dump(2) + "\n";
}

void write_events_json(const std::string& path,
                       const EventDetection& detection) {
  write_text_file(path, events_json_text(detection));
}

EventDetection parse_events_json(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  auto get_ts = [&](const json& obj, const char* key) {
    const auto ts = parse_iso8601_utc(obj.at(key).get<std::string>());
    if (!ts) throw std::runtime_error(path + ": bad timestamp in events");
    return *ts;
  };
  try {
    EventDetection det;
    det.alert_quantile = j.at("alert_quantile").get<double>();
    det.threshold_mwh = j.at("threshold_mwh").get<double>();
    for (const auto& je : j.at("events")) {
      UnderperformanceEvent ev;
      ev.start = get_ts(je, "start");
      ev.end = get_ts(je, "end");
      ev.alert_start = get_ts(je, "alert_start");
      ev.alert_end = get_ts(je, "alert_end");
      ev.peak_deficit_mwh = je.at("peak_deficit_mwh").get<double>();
      ev.lost_energy_mwh = je.at("lost_energy_mwh").get<double>();
      ev.opportunity_cost = je.at("opportunity_cost").get<double>();
      det.events.push_back(ev);
    }
    for (const auto& jf : j.at("overperformance_flags")) {
      OverperformanceFlag flag;
      flag.start = get_ts(jf, "start");
      flag.end = get_ts(jf, "end");
      flag.peak_mwh = jf.at("peak_mwh").get<double>();
      det.overperformance.push_back(flag);
    }
    return det;
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": malformed events json: " + e.what());
  }
}

}  // namespace windsentry

#include "windsentry/diagnose.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "windsentry/csvutil.hpp"
#include "windsentry/stats.hpp"
#include "windsentry/timeparse.hpp"

namespace windsentry {

namespace {

using nlohmann::json;

std::optional<double> channel_value(const ScadaRecord& rec,
                                    const std::string& channel) {
  if (channel == "wind_speed") return rec.wind_speed_mps;
  if (channel == "wind_dir") return rec.wind_dir_deg;
  if (channel == "air_temp") return rec.air_temp_c;
  if (channel == "power") return rec.power_kw;
  if (channel == "pitch_angle") return rec.pitch_angle_deg;
  if (channel == "hydraulic_pressure") return rec.hydraulic_pressure_bar;
  throw std::invalid_argument("unknown channel: " + channel);
}

std::vector<double> channel_values(const std::vector<ScadaRecord>& records,
                                   const std::string& channel) {
  std::vector<double> out;
  for (const auto& rec : records) {
    if (const auto v = channel_value(rec, channel)) out.push_back(*v);
  }
  return out;
}

std::vector<std::vector<double>> bin_pitches(
    const std::vector<ScadaRecord>& records, double width,
    std::size_t n_bins) {
  std::vector<std::vector<double>> bins(n_bins);
  for (const auto& rec : records) {
    const auto b = static_cast<std::size_t>(rec.wind_speed_mps / width);
    if (b < n_bins) bins[b].push_back(rec.pitch_angle_deg);
  }
  return bins;
}

}  // namespace

std::vector<PitchBinRow> pitch_vs_speed_comparison(
    const std::vector<ScadaRecord>& event_records,
    const std::vector<ScadaRecord>& reference_records,
    const TurbineConfig& config) {
  if (event_records.empty() || reference_records.empty()) {
    throw std::invalid_argument(
        "pitch comparison: empty event or reference set");
  }
  const double width = config.bin_width_mps;
  double max_speed = 0.0;
  for (const auto& r : event_records) {
    max_speed = std::max(max_speed, r.wind_speed_mps);
  }
  for (const auto& r : reference_records) {
    max_speed = std::max(max_speed, r.wind_speed_mps);
  }
  const auto n_bins = static_cast<std::size_t>(max_speed / width) + 1;
  const auto ref_bins = bin_pitches(reference_records, width, n_bins);
  const auto event_bins = bin_pitches(event_records, width, n_bins);

  std::vector<PitchBinRow> table;
  for (std::size_t b = 0; b < n_bins; ++b) {
    if (ref_bins[b].empty() || event_bins[b].empty()) continue;
    PitchBinRow row;
    row.bin_lo = static_cast<double>(b) * width;
    row.bin_hi = row.bin_lo + width;
    row.ref_count = ref_bins[b].size();
    row.event_count = event_bins[b].size();
    row.ref_q05 = interpolated_quantile(ref_bins[b], 0.05);
    row.ref_median = interpolated_quantile(ref_bins[b], 0.5);
    row.ref_q95 = interpolated_quantile(ref_bins[b], 0.95);
    row.event_median = interpolated_quantile(event_bins[b], 0.5);
    row.outside_band =
        row.event_median < row.ref_q05 || row.event_median > row.ref_q95;
    table.push_back(row);
  }
  return table;
}

std::vector<ChannelScore> channel_summary(
    const std::vector<ScadaRecord>& event_records,
    const std::vector<ScadaRecord>& reference_records,
    const std::vector<std::string>& channels) {
  std::vector<ChannelScore> scores;
  for (const auto& channel : channels) {
    const auto ref = channel_values(reference_records, channel);
    const auto ev = channel_values(event_records, channel);
    if (ref.empty() || ev.empty()) {
      throw std::invalid_argument("channel_summary: channel '" + channel +
                                  "' missing from event or reference set");
    }
    ChannelScore score;
    score.channel = channel;
    score.ref_mean = mean(ref);
    score.ref_stddev = sample_stddev(ref);
    score.event_mean = mean(ev);
    if (score.ref_stddev > 0.0) {
      score.z = (score.event_mean - score.ref_mean) / score.ref_stddev;
    }
    scores.push_back(std::move(score));
  }
  std::sort(scores.begin(), scores.end(),
            [](const ChannelScore& a, const ChannelScore& b) {
              if (a.z.has_value() != b.z.has_value()) return a.z.has_value();
              if (a.z && b.z && std::abs(*a.z) != std::abs(*b.z)) {
                return std::abs(*a.z) > std::abs(*b.z);
              }
              return a.channel < b.channel;
            });
  return scores;
}

EventDiagnosis diagnose_event(const UnderperformanceEvent& event,
                              const std::vector<ScadaRecord>& records,
                              const TurbineConfig& config) {
  const YearMonth month = year_month_utc(event.start);
  std::vector<ScadaRecord> event_set;
  std::vector<ScadaRecord> reference_set;
  for (const auto& rec : records) {
    const bool in_event =
        rec.timestamp >= event.start && rec.timestamp <= event.end;
    if (in_event) {
      event_set.push_back(rec);
    } else if (year_month_utc(rec.timestamp) == month) {
      reference_set.push_back(rec);
    }
  }
  if (event_set.empty()) {
    throw std::runtime_error("diagnose: no records inside the event span");
  }
  if (reference_set.empty()) {
    throw std::runtime_error(
        "diagnose: no reference records left in the event's month");
  }
  EventDiagnosis diag;
  diag.event_start = event.start;
  diag.event_end = event.end;
  diag.pitch_table =
      pitch_vs_speed_comparison(event_set, reference_set, config);
  diag.channels = channel_summary(event_set, reference_set,
                                  default_diagnosis_channels());
  return diag;
}

std::string diagnosis_json_text(const std::vector<EventDiagnosis>& reports) {
  json out = json::array();
  for (const auto& diag : reports) {
    json rows = json::array();
    for (const auto& row : diag.pitch_table) {
      rows.push_back({
          {"bin_lo", row.bin_lo},
          {"bin_hi", row.bin_hi},
          {"ref_q05", row.ref_q05},
          {"ref_median", row.ref_median},
          {"ref_q95", row.ref_q95},
          {"event_median", row.event_median},
          {"ref_count", row.ref_count},
          {"event_count", row.event_count},
          {"outside_band", row.outside_band},
      });
    }
    json channels = json::array();
    for (const auto& score : diag.channels) {
      json jc = {
          {"channel", score.channel},
          {"ref_mean", score.ref_mean},
          {"ref_stddev", score.ref_stddev},
          {"event_mean", score.event_mean},
      };
      if (score.z) {
        jc["z"] = *score.z;
      } else {
        jc["z"] = nullptr;
      }
      channels.push_back(std::move(jc));
    }
    out.push_back({
        {"event_start", format_iso8601_utc(diag.event_start)},
        {"event_end", format_iso8601_utc(diag.event_end)},
        {"pitch_table", std::move(rows)},
        {"channels", std::move(channels)},
    });
  }
  return out.dump(2) + "\n";
}

void write_diagnosis_json(const std::string& path,
                          const std::vector<EventDiagnosis>& reports) {
  write_text_file(path, diagnosis_json_text(reports));
}

std::vector<EventDiagnosis> parse_diagnosis_json(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  std::vector<EventDiagnosis> reports;
  try {
    for (const auto& jd : j) {
      EventDiagnosis diag;
      const auto start =
          parse_iso8601_utc(jd.at("event_start").get<std::string>());
      const auto end = parse_iso8601_utc(jd.at("event_end").get<std::string>());
      if (!start || !end) {
        throw std::runtime_error("bad event timestamps");
      }
      diag.event_start = *start;
      diag.event_end = *end;
      for (const auto& jr : jd.at("pitch_table")) {
        PitchBinRow row;
        row.bin_lo = jr.at("bin_lo").get<double>();
        row.bin_hi = jr.at("bin_hi").get<double>();
        row.ref_q05 = jr.at("ref_q05").get<double>();
        row.ref_median = jr.at("ref_median").get<double>();
        row.ref_q95 = jr.at("ref_q95").get<double>();
        row.event_median = jr.at("event_median").get<double>();
        row.ref_count = jr.at("ref_count").get<std::size_t>();
        row.event_count = jr.at("event_count").get<std::size_t>();
        row.outside_band = jr.at("outside_band").get<bool>();
        diag.pitch_table.push_back(row);
      }
      for (const auto& jc : jd.at("channels")) {
        ChannelScore score;
        score.channel = jc.at("channel").get<std::string>();
        score.ref_mean = jc.at("ref_mean").get<double>();
        score.ref_stddev = jc.at("ref_stddev").get<double>();
        score.event_mean = jc.at("event_mean").get<double>();
        if (!jc.at("z").is_null()) score.z = jc.at("z").get<double>();
        diag.channels.push_back(std::move(score));
      }
      reports.push_back(std::move(diag));
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": malformed diagnosis json: " + e.what());
  }
  return reports;
}

}  // namespace windsentry

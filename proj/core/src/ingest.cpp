#include "windsentry/ingest.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "windsentry/csvutil.hpp"
#include "windsentry/timeparse.hpp"

namespace windsentry {

namespace {

const char* const kColumns[] = {
    "timestamp",       "wind_speed_mps",        "wind_dir_deg",
    "air_temp_c",      "power_kw",              "pitch_angle_deg",
    "hydraulic_pressure_bar", "status_code",
};
constexpr std::size_t kNumColumns = 8;

void check_header(std::string_view header, const std::string& origin) {
  const auto fields = split_csv_line(header);
  for (std::size_t i = 0; i < kNumColumns; ++i) {
    bool found = false;
    for (const auto& f : fields) {
      if (f == kColumns[i]) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::runtime_error(origin + ": missing required column '" +
                               kColumns[i] + "'");
    }
  }
  if (std::string_view(kScadaCsvHeader) != header) {
    throw std::runtime_error(origin +
                             ": header does not match the SCADA schema");
  }
}

// Returns an error description, or empty string and fills rec.
std::string parse_row(std::string_view line, const TurbineConfig& config,
                      ScadaRecord& rec) {
  const auto fields = split_csv_line(line);
  if (fields.size() != kNumColumns) {
    return "expected 8 fields, got " + std::to_string(fields.size());
  }
  const auto ts = parse_iso8601_utc(fields[0]);
  if (!ts) return "bad timestamp";
  if (!on_ten_minute_grid(*ts)) return "timestamp off the 10-minute grid";
  rec.timestamp = *ts;

  const auto speed = parse_double(fields[1]);
  if (!speed || *speed < 0.0) return "bad wind_speed_mps";
  rec.wind_speed_mps = *speed;

  const auto dir = parse_double(fields[2]);
  if (!dir || *dir < 0.0 || *dir >= 360.0) return "bad wind_dir_deg";
  rec.wind_dir_deg = *dir;

  const auto temp = parse_double(fields[3]);
  if (!temp) return "bad air_temp_c";
  rec.air_temp_c = *temp;

  const auto power = parse_double(fields[4]);
  if (!power) return "bad power_kw";
  if (*power < -config.rated_power_kw ||
      *power > 1.1 * config.rated_power_kw) {
    return "power_kw outside sanity bounds";
  }
  rec.power_kw = *power;

  const auto pitch = parse_double(fields[5]);
  if (!pitch) return "bad pitch_angle_deg";
  rec.pitch_angle_deg = *pitch;

  if (fields[6].empty()) {
    rec.hydraulic_pressure_bar.reset();
  } else {
    const auto pressure = parse_double(fields[6]);
    if (!pressure) return "bad hydraulic_pressure_bar";
    rec.hydraulic_pressure_bar = *pressure;
  }

  const auto status = parse_int(fields[7]);
  if (!status) return "bad status_code";
  rec.status_code = static_cast<int>(*status);
  return {};
}

}  // namespace

ParseResult parse_scada_text(const std::string& text,
                             const TurbineConfig& config,
                             const std::string& origin) {
  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) {
        if (start < text.size()) lines.push_back(text.substr(start));
        break;
      }
      std::string line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
      start = end + 1;
    }
  }
  if (lines.empty()) throw std::runtime_error(origin + ": empty input");
  check_header(lines[0], origin);

  ParseResult result;
  std::size_t data_rows = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    ++data_rows;
    ScadaRecord rec;
    std::string err = parse_row(lines[i], config, rec);
    if (err.empty()) {
      result.records.push_back(rec);
    } else {
      result.rejects.push_back({i + 1, std::move(err), lines[i]});
    }
  }
  if (data_rows == 0) throw std::runtime_error(origin + ": no data rows");
  if (result.rejects.size() * 2 > data_rows) {
    throw std::runtime_error(
        origin + ": " + std::to_string(result.rejects.size()) + " of " +
        std::to_string(data_rows) + " rows rejected, aborting");
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const ScadaRecord& a, const ScadaRecord& b) {
              return a.timestamp < b.timestamp;
            });
  for (std::size_t i = 1; i < result.records.size(); ++i) {
    if (result.records[i].timestamp == result.records[i - 1].timestamp) {
      throw std::runtime_error(
          origin + ": duplicate timestamp " +
          format_iso8601_utc(result.records[i].timestamp));
    }
  }
  return result;
}

ParseResult parse_scada_csv(const std::string& path,
                            const TurbineConfig& config) {
  return parse_scada_text(read_text_file(path), config, path);
}

std::vector<Gap> find_gaps(const std::vector<ScadaRecord>& records) {
  std::vector<Gap> gaps;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const std::int64_t delta = records[i].timestamp - records[i - 1].timestamp;
    if (delta > kStepSeconds) {
      gaps.push_back({records[i - 1].timestamp + kStepSeconds,
                      static_cast<std::size_t>(delta / kStepSeconds - 1)});
    }
  }
  return gaps;
}

std::string scada_csv_text(const std::vector<ScadaRecord>& records) {
  std::string out = kScadaCsvHeader;
  out += '\n';
  for (const auto& r : records) {
    out += format_iso8601_utc(r.timestamp);
    out += ',';
    out += format_double(r.wind_speed_mps);
    out += ',';
    out += format_double(r.wind_dir_deg);
    out += ',';
    out += format_double(r.air_temp_c);
    out += ',';
    out += format_double(r.power_kw);
    out += ',';
    out += format_double(r.pitch_angle_deg);
    out += ',';
    if (r.hydraulic_pressure_bar) {
      out += format_double(*r.hydraulic_pressure_bar);
    }
    out += ',';
    out += std::to_string(r.status_code);
    out += '\n';
  }
  return out;
}

void write_scada_csv(const std::string& path,
                     const std::vector<ScadaRecord>& records) {
  write_text_file(path, scada_csv_text(records));
}

void write_rejects_csv(const std::string& path,
                       const std::vector<RejectedRow>& rejects) {
  std::string out = "line,reason,raw\n";
  for (const auto& r : rejects) {
    out += std::to_string(r.line);
    out += ',';
    out += r.reason;
    out += ",\"";
    for (char c : r.raw) {
      if (c == '"') out += "\"\"";
      else out += c;
    }
    out += "\"\n";
  }
  write_text_file(path, out);
}

}  // namespace windsentry

#include "windsentry/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "windsentry/csvutil.hpp"
#include "windsentry/stats.hpp"

namespace windsentry {

std::size_t BinQuantiles::bin_index(double speed_mps) const {
  if (bins.empty()) throw std::logic_error("bin_index on empty bands");
  const auto idx = static_cast<std::size_t>(speed_mps / bin_width);
  return std::min(idx, bins.size() - 1);
}

std::vector<ScadaRecord> filter_status(const std::vector<ScadaRecord>& records,
                                       int radius) {
  const std::size_t n = records.size();
  std::vector<char> drop(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (records[i].status_code == 0) continue;
    const std::size_t lo = i >= static_cast<std::size_t>(radius)
                               ? i - static_cast<std::size_t>(radius)
                               : 0;
    const std::size_t hi =
        std::min(n - 1, i + static_cast<std::size_t>(radius));
    for (std::size_t j = lo; j <= hi; ++j) drop[j] = 1;
  }
  std::vector<ScadaRecord> kept;
  kept.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!drop[i]) kept.push_back(records[i]);
  }
  return kept;
}

BinQuantiles compute_bin_quantiles(const std::vector<ScadaRecord>& records,
                                   const TurbineConfig& config) {
  if (records.empty()) {
    throw std::invalid_argument("compute_bin_quantiles: no records");
  }
  const double width = config.bin_width_mps;
  double max_speed = 0.0;
  for (const auto& r : records) max_speed = std::max(max_speed, r.wind_speed_mps);
  const std::size_t n_bins = static_cast<std::size_t>(max_speed / width) + 1;

  std::vector<std::vector<double>> powers(n_bins);
  for (const auto& r : records) {
    powers[static_cast<std::size_t>(r.wind_speed_mps / width)].push_back(
        r.power_kw);
  }

  BinQuantiles out;
  out.bin_width = width;
  out.bins.resize(n_bins);
  for (std::size_t b = 0; b < n_bins; ++b) {
    PowerBin& bin = out.bins[b];
    bin.lo = static_cast<double>(b) * width;
    bin.hi = bin.lo + width;
    bin.count = powers[b].size();
    bin.filtering_disabled =
        bin.count < static_cast<std::size_t>(config.min_bin_count);
    if (bin.count > 0) {
      bin.q_lo_kw = interpolated_quantile(powers[b], config.quantile_lo);
      bin.q_hi_kw = interpolated_quantile(powers[b], config.quantile_hi);
      bin.median_kw = interpolated_quantile(powers[b], 0.5);
    }
  }
  return out;
}

OutlierFlags flag_outliers(const std::vector<ScadaRecord>& records,
                           const BinQuantiles& bands, double margin) {
  OutlierFlags out;
  out.flagged.assign(records.size(), 0);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto raw =
        static_cast<std::size_t>(records[i].wind_speed_mps / bands.bin_width);
    if (raw >= bands.bins.size()) ++out.overflow;
    const PowerBin& bin = bands.bins[std::min(raw, bands.bins.size() - 1)];
    if (bin.filtering_disabled) continue;
    const double iqd = bin.q_hi_kw - bin.q_lo_kw;
    const double lo = bin.q_lo_kw - margin * iqd;
    const double hi = bin.q_hi_kw + margin * iqd;
    if (records[i].power_kw < lo || records[i].power_kw > hi) {
      out.flagged[i] = 1;
    }
  }
  return out;
}

CleanResult clean(const std::vector<ScadaRecord>& records,
                  const TurbineConfig& config) {
  CleanResult result;
  auto filtered = filter_status(records, config.status_exclusion_radius);
  if (filtered.empty()) {
    throw std::runtime_error("clean: no records left after status filtering");
  }
  result.status_removed = records.size() - filtered.size();
  result.bands = compute_bin_quantiles(filtered, config);
  const auto flags =
      flag_outliers(filtered, result.bands, config.outlier_margin);
  result.overflow = flags.overflow;
  for (std::size_t i = 0; i < filtered.size(); ++i) {
    if (flags.flagged[i]) {
      result.removed.push_back(filtered[i]);
    } else {
      result.clean.push_back(filtered[i]);
    }
  }
  return result;
}

std::string bands_csv_text(const BinQuantiles& bands) {
  std::string out = "bin_lo,bin_hi,q_lo_kw,q_hi_kw,median_kw,count\n";
  for (const auto& bin : bands.bins) {
    if (bin.count == 0) continue;
    out += format_double(bin.lo);
    out += ',';
    out += format_double(bin.hi);
    out += ',';
    out += format_double(bin.q_lo_kw);
    out += ',';
    out += format_double(bin.q_hi_kw);
    out += ',';
    out += format_double(bin.median_kw);
    out += ',';
    out += std::to_string(bin.count);
    out += '\n';
  }
  return out;
}

void write_bands_csv(const std::string& path, const BinQuantiles& bands) {
  write_text_file(path, bands_csv_text(bands));
}

BinQuantiles parse_bands_csv(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty() || lines[0] != "bin_lo,bin_hi,q_lo_kw,q_hi_kw,median_kw,count") {
    throw std::runtime_error(path + ": not a bands csv");
  }
  BinQuantiles out;
  std::vector<PowerBin> occupied;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split_csv_line(lines[i]);
    if (f.size() != 6) throw std::runtime_error(path + ": bad bands row");
    PowerBin bin;
    const auto lo = parse_double(f[0]);
    const auto hi = parse_double(f[1]);
    const auto qlo = parse_double(f[2]);
    const auto qhi = parse_double(f[3]);
    const auto med = parse_double(f[4]);
    const auto count = parse_int(f[5]);
    if (!lo || !hi || !qlo || !qhi || !med || !count) {
      throw std::runtime_error(path + ": bad bands row");
    }
    bin.lo = *lo;
    bin.hi = *hi;
    bin.q_lo_kw = *qlo;
    bin.q_hi_kw = *qhi;
    bin.median_kw = *med;
    bin.count = static_cast<std::size_t>(*count);
    bin.filtering_disabled = false;
    occupied.push_back(bin);
  }
  if (occupied.empty()) throw std::runtime_error(path + ": no bands");
  out.bin_width = occupied[0].hi - occupied[0].lo;
  const auto last =
      static_cast<std::size_t>(occupied.back().lo / out.bin_width);
  out.bins.resize(last + 1);
  for (std::size_t b = 0; b <= last; ++b) {
    out.bins[b].lo = static_cast<double>(b) * out.bin_width;
    out.bins[b].hi = out.bins[b].lo + out.bin_width;
  }
  for (const auto& bin : occupied) {
    out.bins[static_cast<std::size_t>(bin.lo / out.bin_width)] = bin;
  }
  return out;
}

}  // namespace windsentry

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "windsentry/scada.hpp"

namespace windsentry {

// Per-wind-speed-bin power band. Bins are contiguous from 0 in steps of
// bin_width; a bin with fewer than min_bin_count points has filtering
// disabled (its band is still reported when occupied).
struct PowerBin {
  double lo = 0.0;
  double hi = 0.0;
  double q_lo_kw = 0.0;
  double q_hi_kw = 0.0;
  double median_kw = 0.0;
  std::size_t count = 0;
  bool filtering_disabled = true;
};

struct BinQuantiles {
  double bin_width = 1.0;
  std::vector<PowerBin> bins;

  // Bin holding the given speed; speeds beyond the last edge map to the
  // last bin.
  std::size_t bin_index(double speed_mps) const;
};

// Drop records with nonzero status plus `radius` records on each side.
std::vector<ScadaRecord> filter_status(const std::vector<ScadaRecord>& records,
                                       int radius);

// Empirical per-bin power quantiles (interpolated order statistics).
// Throws std::invalid_argument on empty input.
BinQuantiles compute_bin_quantiles(const std::vector<ScadaRecord>& records,
                                   const TurbineConfig& config);

struct OutlierFlags {
  std::vector<char> flagged;     // parallel to the input records
  std::size_t overflow = 0;      // records beyond the last bin edge
};

// A record is flagged iff its power lies strictly outside
// [q_lo - margin*(q_hi - q_lo), q_hi + margin*(q_hi - q_lo)] for its bin.
// Records in filtering-disabled bins are never flagged.
OutlierFlags flag_outliers(const std::vector<ScadaRecord>& records,
                           const BinQuantiles& bands, double margin);

struct CleanResult {
  std::vector<ScadaRecord> clean;
  std::vector<ScadaRecord> removed;  // outlier-flagged rows
  BinQuantiles bands;
  std::size_t status_removed = 0;    // rows dropped by the status filter
  std::size_t overflow = 0;          // rows assigned to the last bin
};

// status filter, then bin quantiles, then outlier removal.
CleanResult clean(const std::vector<ScadaRecord>& records,
                  const TurbineConfig& config);

// Occupied bins only: bin_lo,bin_hi,q_lo_kw,q_hi_kw,median_kw,count
std::string bands_csv_text(const BinQuantiles& bands);
void write_bands_csv(const std::string& path, const BinQuantiles& bands);
BinQuantiles parse_bands_csv(const std::string& path);

}  // namespace windsentry

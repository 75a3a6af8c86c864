#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "windsentry/monitor.hpp"
#include "windsentry/scada.hpp"

namespace windsentry {

struct PitchBinRow {
  double bin_lo = 0.0;
  double bin_hi = 0.0;
  double ref_q05 = 0.0;
  double ref_median = 0.0;
  double ref_q95 = 0.0;
  double event_median = 0.0;
  std::size_t ref_count = 0;
  std::size_t event_count = 0;
  bool outside_band = false;  // event median outside the reference band
};

struct ChannelScore {
  std::string channel;
  double ref_mean = 0.0;
  double ref_stddev = 0.0;
  double event_mean = 0.0;
  std::optional<double> z;  // absent when the reference has zero spread
};

struct EventDiagnosis {
  std::int64_t event_start = 0;
  std::int64_t event_end = 0;
  std::vector<PitchBinRow> pitch_table;
  std::vector<ChannelScore> channels;  // ranked by |z| descending
};

// Reference pitch band (5/50/95%) per wind-speed bin against the event
// median. Bins lacking samples on either side are omitted.
std::vector<PitchBinRow> pitch_vs_speed_comparison(
    const std::vector<ScadaRecord>& event_records,
    const std::vector<ScadaRecord>& reference_records,
    const TurbineConfig& config);

// Per-channel z-score of the event mean against the reference
// distribution, ranked by |z| descending; undefined z ranks last, ties
// break on the channel name. Throws std::invalid_argument when a
// requested channel has no samples in either set.
std::vector<ChannelScore> channel_summary(
    const std::vector<ScadaRecord>& event_records,
    const std::vector<ScadaRecord>& reference_records,
    const std::vector<std::string>& channels);

inline const std::vector<std::string>& default_diagnosis_channels() {
  static const std::vector<std::string> kChannels{"hydraulic_pressure",
                                                  "pitch_angle"};
  return kChannels;
}

// Event span = [start, end]; reference = the rest of the event's starting
// calendar month. Throws std::runtime_error if that reference is empty.
EventDiagnosis diagnose_event(const UnderperformanceEvent& event,
                              const std::vector<ScadaRecord>& records,
                              const TurbineConfig& config);

std::string diagnosis_json_text(const std::vector<EventDiagnosis>& reports);
void write_diagnosis_json(const std::string& path,
                          const std::vector<EventDiagnosis>& reports);
std::vector<EventDiagnosis> parse_diagnosis_json(const std::string& path);

}  // namespace windsentry

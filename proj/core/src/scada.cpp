#include "windsentry/scada.hpp"

#include <cmath>
#include <stdexcept>

namespace windsentry {

int TurbineConfig::horizon_steps() const {
  return static_cast<int>(std::llround(horizon_hours * 6.0));
}

void TurbineConfig::validate() const {
  if (!(rated_power_kw > 0.0)) {
    throw std::invalid_argument("rated_power_kw must be positive");
  }
  if (!(cut_in_mps >= 0.0) || !(cut_out_mps > cut_in_mps)) {
    throw std::invalid_argument("need 0 <= cut_in < cut_out");
  }
  if (!(bin_width_mps > 0.0)) {
    throw std::invalid_argument("bin_width_mps must be positive");
  }
  if (!(quantile_lo >= 0.0 && quantile_lo < quantile_hi && quantile_hi <= 1.0)) {
    throw std::invalid_argument("need 0 <= quantile_lo < quantile_hi <= 1");
  }
  if (!(outlier_margin >= 0.0)) {
    throw std::invalid_argument("outlier_margin must be >= 0");
  }
  if (min_bin_count < 2) {
    throw std::invalid_argument("min_bin_count must be >= 2");
  }
  if (status_exclusion_radius < 0) {
    throw std::invalid_argument("status_exclusion_radius must be >= 0");
  }
  if (horizon_steps() < 1) {
    throw std::invalid_argument("horizon_hours too small");
  }
  if (!(alert_quantile > 0.0 && alert_quantile < 0.5)) {
    throw std::invalid_argument("alert_quantile must be in (0, 0.5)");
  }
  if (!(merge_gap_hours >= 0.0)) {
    throw std::invalid_argument("merge_gap_hours must be >= 0");
  }
  if (!(min_window_coverage > 0.0 && min_window_coverage <= 1.0)) {
    throw std::invalid_argument("min_window_coverage must be in (0, 1]");
  }
  if (!(energy_price_per_mwh >= 0.0)) {
    throw std::invalid_argument("energy_price_per_mwh must be >= 0");
  }
}

}  // namespace windsentry

#include "windsentry/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "windsentry/csvutil.hpp"
#include "windsentry/rng.hpp"
#include "windsentry/timeparse.hpp"

namespace windsentry {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw std::runtime_error("scenario " + origin + ": " + what);
}

std::int64_t get_time(const json& j, const std::string& origin,
                      const std::string& key) {
  if (!j.is_string()) fail(origin, "'" + key + "' must be an ISO-8601 string");
  const auto ts = parse_iso8601_utc(j.get<std::string>());
  if (!ts) fail(origin, "'" + key + "' is not a YYYY-MM-DDTHH:MM:SSZ instant");
  return *ts;
}

double get_num(const json& j, const std::string& origin,
               const std::string& key) {
  if (!j.is_number()) fail(origin, "'" + key + "' must be a number");
  return j.get<double>();
}

int get_int(const json& j, const std::string& origin, const std::string& key) {
  if (!j.is_number_integer()) fail(origin, "'" + key + "' must be an integer");
  return j.get<int>();
}

bool in_window(std::int64_t t, std::int64_t start, std::int64_t end) {
  return t >= start && t < end;
}

bool in_sector(double dir, const DirectionDerate& sector) {
  if (sector.from_deg <= sector.to_deg) {
    return dir >= sector.from_deg && dir < sector.to_deg;
  }
  return dir >= sector.from_deg || dir < sector.to_deg;
}

void check_window(std::int64_t start, std::int64_t end,
                  const Scenario& scenario, const char* what) {
  if (start >= end || start < scenario.start_timestamp ||
      end > scenario.end_timestamp()) {
    throw std::invalid_argument(std::string("scenario: ") + what +
                                " window outside the simulated span");
  }
}

}  // namespace

const char* fault_kind_name(FaultKind kind) {
  switch (kind) {
    case FaultKind::PitchMisalignment:
      return "pitch_misalignment";
    case FaultKind::HydraulicDrop:
      return "hydraulic_drop";
    case FaultKind::AnemometerBias:
      return "anemometer_bias";
    case FaultKind::DataGap:
      return "data_gap";
  }
  return "?";
}

FaultKind fault_kind_from_name(const std::string& name) {
  if (name == "pitch_misalignment") return FaultKind::PitchMisalignment;
  if (name == "hydraulic_drop") return FaultKind::HydraulicDrop;
  if (name == "anemometer_bias") return FaultKind::AnemometerBias;
  if (name == "data_gap") return FaultKind::DataGap;
  throw std::invalid_argument("unknown fault kind: " + name);
}

std::int64_t Scenario::end_timestamp() const {
  return start_timestamp +
         static_cast<std::int64_t>(duration_days) * 86400;
}

void Scenario::validate() const {
  if (!on_ten_minute_grid(start_timestamp)) {
    throw std::invalid_argument("scenario: start off the 10-minute grid");
  }
  if (duration_days < 1) {
    throw std::invalid_argument("scenario: duration_days < 1");
  }
  if (!(weather.weibull_shape > 0.0) || !(weather.weibull_scale > 0.0)) {
    throw std::invalid_argument("scenario: weibull parameters must be positive");
  }
  if (!(weather.autocorrelation >= 0.0 && weather.autocorrelation < 1.0)) {
    throw std::invalid_argument("scenario: autocorrelation outside [0, 1)");
  }
  if (!(turbine.cut_in_mps >= 0.0 &&
        turbine.cut_in_mps < turbine.rated_speed_mps &&
        turbine.rated_speed_mps < turbine.cut_out_mps)) {
    throw std::invalid_argument("scenario: need cut_in < rated_speed < cut_out");
  }
  if (!(turbine.rated_power_kw > 0.0) || turbine.consumption_kw < 0.0) {
    throw std::invalid_argument("scenario: bad power ratings");
  }
  if (power.noise_kw < 0.0) {
    throw std::invalid_argument("scenario: noise_kw < 0");
  }
  for (const auto& derate : power.direction_derates) {
    if (!(derate.fraction >= 0.0 && derate.fraction <= 1.0)) {
      throw std::invalid_argument("scenario: derate fraction outside [0, 1]");
    }
  }
  for (const auto& pin : weather.wind_pins) {
    check_window(pin.start, pin.end, *this, "wind pin");
    if (pin.speed_mps < 0.0) {
      throw std::invalid_argument("scenario: pinned wind speed < 0");
    }
  }
  for (const auto& ev : status_events) {
    check_window(ev.start, ev.end, *this, "status event");
    if (ev.code == 0) {
      throw std::invalid_argument("scenario: status event code must be nonzero");
    }
  }
  for (const auto& fault : faults) {
    check_window(fault.start, fault.end, *this, "fault");
    if (!(fault.derate_fraction >= 0.0 && fault.derate_fraction <= 1.0)) {
      throw std::invalid_argument("scenario: derate_fraction outside [0, 1]");
    }
  }
}

double ground_truth_power(double v_mps, const SimTurbineParams& turbine) {
  if (v_mps < turbine.cut_in_mps) return -turbine.consumption_kw;
  if (v_mps >= turbine.cut_out_mps) return 0.0;
  if (v_mps >= turbine.rated_speed_mps) return turbine.rated_power_kw;
  const double ci3 = std::pow(turbine.cut_in_mps, 3);
  const double vr3 = std::pow(turbine.rated_speed_mps, 3);
  const double v3 = std::pow(v_mps, 3);
  return turbine.rated_power_kw * (v3 - ci3) / (vr3 - ci3);
}

SimOutput generate(const Scenario& scenario) {
  scenario.validate();
  const std::size_t n_steps =
      static_cast<std::size_t>(scenario.duration_days) * 144;
  const WeatherParams& w = scenario.weather;
  const double rho = w.autocorrelation;
  const double innovation = std::sqrt(1.0 - rho * rho);
  const double inv_shape = 1.0 / w.weibull_shape;

  SimOutput out;
  out.records.reserve(n_steps);
  out.truth.reserve(n_steps);

  Rng rng(scenario.seed);
  double z = 0.0;
  double dir = 0.0;
  for (std::size_t i = 0; i < n_steps; ++i) {
    const std::int64_t t =
        scenario.start_timestamp + static_cast<std::int64_t>(i) * kStepSeconds;
    // One draw per channel per step, in fixed order, so fault windows do
    // not shift the stream.
    const double eps_wind = rng.gaussian();
    const double eps_dir = rng.gaussian();
    const double eps_temp = rng.gaussian();
    const double eps_pitch = rng.gaussian();
    const double eps_pressure = rng.gaussian();
    const double eps_power = rng.gaussian();

    z = i == 0 ? eps_wind : rho * z + innovation * eps_wind;
    // Weibull speed via the gaussian copula: 1 - Phi(z) in the tail.
    const double tail = 0.5 * std::erfc(z / std::numbers::sqrt2);
    double v = w.weibull_scale * std::pow(-std::log(tail), inv_shape);
    for (const auto& pin : w.wind_pins) {
      if (in_window(t, pin.start, pin.end)) v = pin.speed_mps;
    }

    dir += w.direction_drift_deg + w.direction_sigma_deg * eps_dir;
    dir = std::fmod(dir, 360.0);
    if (dir < 0.0) dir += 360.0;

    const double days =
        static_cast<double>(t - scenario.start_timestamp) / 86400.0;
    const double hour = (days - std::floor(days)) * 24.0;
    const double temp =
        w.temp_mean_c -
        w.temp_seasonal_amp_c *
            std::cos(2.0 * std::numbers::pi * (days - 15.0) / 365.25) -
        w.temp_daily_amp_c *
            std::cos(2.0 * std::numbers::pi * (hour - 14.0) / 24.0) +
        w.temp_noise_c * eps_temp;

    double pitch = v > scenario.turbine.rated_speed_mps
                       ? scenario.channels.pitch_rate_deg_per_mps *
                             (v - scenario.turbine.rated_speed_mps)
                       : 0.0;
    pitch += scenario.channels.pitch_noise_deg * eps_pitch;

    double pressure = scenario.channels.pressure_mean_bar +
                      scenario.channels.pressure_noise_bar * eps_pressure;

    const double base = ground_truth_power(v, scenario.turbine);
    double unfaulted = base;
    if (base > 0.0) {
      double factor = 1.0;
      for (const auto& derate : scenario.power.direction_derates) {
        if (in_sector(dir, derate)) factor *= 1.0 - derate.fraction;
      }
      factor *= 1.0 - scenario.power.temp_coeff_per_c *
                          (temp - scenario.power.temp_ref_c);
      unfaulted =
          std::min(base * factor, scenario.turbine.rated_power_kw);
    }

    double faulted = unfaulted;
    double recorded_v = v;
    bool gap = false;
    for (const auto& fault : scenario.faults) {
      if (!in_window(t, fault.start, fault.end)) continue;
      switch (fault.kind) {
        case FaultKind::PitchMisalignment:
          if (faulted > 0.0) faulted *= 1.0 - fault.derate_fraction;
          pitch += fault.pitch_offset_deg;
          break;
        case FaultKind::HydraulicDrop:
          pressure -= fault.pressure_drop_bar;
          break;
        case FaultKind::AnemometerBias:
          recorded_v = std::max(0.0, recorded_v + fault.bias_mps);
          break;
        case FaultKind::DataGap:
          gap = true;
          break;
      }
    }
    int status = 0;
    for (const auto& ev : scenario.status_events) {
      if (in_window(t, ev.start, ev.end)) {
        status = ev.code;
        faulted = -scenario.turbine.consumption_kw;
      }
    }

    out.truth.push_back({t, unfaulted, (unfaulted - faulted) / 6.0});
    if (gap) continue;

    ScadaRecord rec;
    rec.timestamp = t;
    rec.wind_speed_mps = recorded_v;
    rec.wind_dir_deg = dir;
    rec.air_temp_c = temp;
    rec.power_kw =
        std::clamp(faulted + scenario.power.noise_kw * eps_power,
                   -scenario.turbine.rated_power_kw,
                   1.1 * scenario.turbine.rated_power_kw);
    rec.pitch_angle_deg = pitch;
    rec.hydraulic_pressure_bar = pressure;
    rec.status_code = status;
    out.records.push_back(rec);
  }
  return out;
}

Scenario parse_scenario_json(const std::string& text,
                             const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) fail(origin, "top level must be an object");

  Scenario sc;
  for (const auto& [key, value] : j.items()) {
    if (key == "start") {
      sc.start_timestamp = get_time(value, origin, key);
    } else if (key == "duration_days") {
      sc.duration_days = get_int(value, origin, key);
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) fail(origin, "'seed' must be unsigned");
      sc.seed = value.get<std::uint64_t>();
    } else if (key == "weather") {
      for (const auto& [wk, wv] : value.items()) {
        if (wk == "weibull_shape") sc.weather.weibull_shape = get_num(wv, origin, wk);
        else if (wk == "weibull_scale") sc.weather.weibull_scale = get_num(wv, origin, wk);
        else if (wk == "autocorrelation") sc.weather.autocorrelation = get_num(wv, origin, wk);
        else if (wk == "direction_drift_deg") sc.weather.direction_drift_deg = get_num(wv, origin, wk);
        else if (wk == "direction_sigma_deg") sc.weather.direction_sigma_deg = get_num(wv, origin, wk);
        else if (wk == "temp_mean_c") sc.weather.temp_mean_c = get_num(wv, origin, wk);
        else if (wk == "temp_seasonal_amp_c") sc.weather.temp_seasonal_amp_c = get_num(wv, origin, wk);
        else if (wk == "temp_daily_amp_c") sc.weather.temp_daily_amp_c = get_num(wv, origin, wk);
        else if (wk == "temp_noise_c") sc.weather.temp_noise_c = get_num(wv, origin, wk);
        else if (wk == "wind_pins") {
          for (const auto& jp : wv) {
            WindPin pin;
            pin.start = get_time(jp.at("start"), origin, "wind_pins.start");
            pin.end = get_time(jp.at("end"), origin, "wind_pins.end");
            pin.speed_mps = get_num(jp.at("speed_mps"), origin, "wind_pins.speed_mps");
            sc.weather.wind_pins.push_back(pin);
          }
        } else {
          fail(origin, "unknown key 'weather." + wk + "'");
        }
      }
    } else if (key == "turbine") {
      for (const auto& [tk, tv] : value.items()) {
        if (tk == "cut_in_mps") sc.turbine.cut_in_mps = get_num(tv, origin, tk);
        else if (tk == "rated_speed_mps") sc.turbine.rated_speed_mps = get_num(tv, origin, tk);
        else if (tk == "cut_out_mps") sc.turbine.cut_out_mps = get_num(tv, origin, tk);
        else if (tk == "rated_power_kw") sc.turbine.rated_power_kw = get_num(tv, origin, tk);
        else if (tk == "consumption_kw") sc.turbine.consumption_kw = get_num(tv, origin, tk);
        else fail(origin, "unknown key 'turbine." + tk + "'");
      }
    } else if (key == "power") {
      for (const auto& [pk, pv] : value.items()) {
        if (pk == "noise_kw") sc.power.noise_kw = get_num(pv, origin, pk);
        else if (pk == "temp_coeff_per_c") sc.power.temp_coeff_per_c = get_num(pv, origin, pk);
        else if (pk == "temp_ref_c") sc.power.temp_ref_c = get_num(pv, origin, pk);
        else if (pk == "direction_derates") {
          for (const auto& jd : pv) {
            DirectionDerate derate;
            derate.from_deg = get_num(jd.at("from_deg"), origin, "from_deg");
            derate.to_deg = get_num(jd.at("to_deg"), origin, "to_deg");
            derate.fraction = get_num(jd.at("fraction"), origin, "fraction");
            sc.power.direction_derates.push_back(derate);
          }
        } else {
          fail(origin, "unknown key 'power." + pk + "'");
        }
      }
    } else if (key == "channels") {
      for (const auto& [ck, cv] : value.items()) {
        if (ck == "pressure_mean_bar") sc.channels.pressure_mean_bar = get_num(cv, origin, ck);
        else if (ck == "pressure_noise_bar") sc.channels.pressure_noise_bar = get_num(cv, origin, ck);
        else if (ck == "pitch_noise_deg") sc.channels.pitch_noise_deg = get_num(cv, origin, ck);
        else if (ck == "pitch_rate_deg_per_mps") sc.channels.pitch_rate_deg_per_mps = get_num(cv, origin, ck);
        else fail(origin, "unknown key 'channels." + ck + "'");
      }
    } else if (key == "status_events") {
      for (const auto& je : value) {
        StatusEvent ev;
        ev.start = get_time(je.at("start"), origin, "status_events.start");
        ev.end = get_time(je.at("end"), origin, "status_events.end");
        ev.code = get_int(je.at("code"), origin, "status_events.code");
        sc.status_events.push_back(ev);
      }
    } else if (key == "faults") {
      for (const auto& jf : value) {
        FaultSpec fault;
        fault.kind =
            fault_kind_from_name(jf.at("kind").get<std::string>());
        fault.start = get_time(jf.at("start"), origin, "faults.start");
        fault.end = get_time(jf.at("end"), origin, "faults.end");
        for (const auto& [fk, fv] : jf.items()) {
          if (fk == "kind" || fk == "start" || fk == "end") continue;
          if (fk == "derate_fraction") fault.derate_fraction = get_num(fv, origin, fk);
          else if (fk == "pitch_offset_deg") fault.pitch_offset_deg = get_num(fv, origin, fk);
          else if (fk == "pressure_drop_bar") fault.pressure_drop_bar = get_num(fv, origin, fk);
          else if (fk == "bias_mps") fault.bias_mps = get_num(fv, origin, fk);
          else fail(origin, "unknown key 'faults." + fk + "'");
        }
        sc.faults.push_back(fault);
      }
    } else {
      fail(origin, "unknown key '" + key + "'");
    }
  }
  try {
    sc.validate();
  } catch (const std::invalid_argument& e) {
    fail(origin, e.what());
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  return parse_scenario_json(read_text_file(path), path);
}

std::string scenario_json_text(const Scenario& sc) {
  json pins = json::array();
  for (const auto& pin : sc.weather.wind_pins) {
    pins.push_back({{"start", format_iso8601_utc(pin.start)},
                    {"end", format_iso8601_utc(pin.end)},
                    {"speed_mps", pin.speed_mps}});
  }
  json derates = json::array();
  for (const auto& derate : sc.power.direction_derates) {
    derates.push_back({{"from_deg", derate.from_deg},
                       {"to_deg", derate.to_deg},
                       {"fraction", derate.fraction}});
  }
  json status = json::array();
  for (const auto& ev : sc.status_events) {
    status.push_back({{"start", format_iso8601_utc(ev.start)},
                      {"end", format_iso8601_utc(ev.end)},
                      {"code", ev.code}});
  }
  json faults = json::array();
  for (const auto& fault : sc.faults) {
    json jf = {{"kind", fault_kind_name(fault.kind)},
               {"start", format_iso8601_utc(fault.start)},
               {"end", format_iso8601_utc(fault.end)}};
    switch (fault.kind) {
      case FaultKind::PitchMisalignment:
        jf["derate_fraction"] = fault.derate_fraction;
        jf["pitch_offset_deg"] = fault.pitch_offset_deg;
        break;
      case FaultKind::HydraulicDrop:
        jf["pressure_drop_bar"] = fault.pressure_drop_bar;
        break;
      case FaultKind::AnemometerBias:
        jf["bias_mps"] = fault.bias_mps;
        break;
      case FaultKind::DataGap:
        break;
    }
    faults.push_back(std::move(jf));
  }
  json j = {
      {"start", format_iso8601_utc(sc.start_timestamp)},
      {"duration_days", sc.duration_days},
      {"seed", sc.seed},
      {"weather",
       {{"weibull_shape", sc.weather.weibull_shape},
        {"weibull_scale", sc.weather.weibull_scale},
        {"autocorrelation", sc.weather.autocorrelation},
        {"direction_drift_deg", sc.weather.direction_drift_deg},
        {"direction_sigma_deg", sc.weather.direction_sigma_deg},
        {"temp_mean_c", sc.weather.temp_mean_c},
        {"temp_seasonal_amp_c", sc.weather.temp_seasonal_amp_c},
        {"temp_daily_amp_c", sc.weather.temp_daily_amp_c},
        {"temp_noise_c", sc.weather.temp_noise_c},
        {"wind_pins", std::move(pins)}}},
      {"turbine",
       {{"cut_in_mps", sc.turbine.cut_in_mps},
        {"rated_speed_mps", sc.turbine.rated_speed_mps},
        {"cut_out_mps", sc.turbine.cut_out_mps},
        {"rated_power_kw", sc.turbine.rated_power_kw},
        {"consumption_kw", sc.turbine.consumption_kw}}},
      {"power",
       {{"noise_kw", sc.power.noise_kw},
        {"temp_coeff_per_c", sc.power.temp_coeff_per_c},
        {"temp_ref_c", sc.power.temp_ref_c},
        {"direction_derates", std::move(derates)}}},
      {"channels",
       {{"pressure_mean_bar", sc.channels.pressure_mean_bar},
        {"pressure_noise_bar", sc.channels.pressure_noise_bar},
        {"pitch_noise_deg", sc.channels.pitch_noise_deg},
        {"pitch_rate_deg_per_mps", sc.channels.pitch_rate_deg_per_mps}}},
      {"status_events", std::move(status)},
      {"faults", std::move(faults)},
  };
  return j.dump(2) + "\n";
}

std::string truth_csv_text(const std::vector<TruthPoint>& truth) {
  std::string out = "timestamp,true_expected_kw,injected_deficit_kwh\n";
  for (const auto& pt : truth) {
    out += format_iso8601_utc(pt.timestamp);
    out += ',';
    out += format_double(pt.true_expected_kw);
    out += ',';
    out += format_double(pt.injected_deficit_kwh);
    out += '\n';
  }
  return out;
}

void write_truth_csv(const std::string& path,
                     const std::vector<TruthPoint>& truth) {
  write_text_file(path, truth_csv_text(truth));
}

std::vector<TruthPoint> parse_truth_csv(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty() ||
      lines[0] != "timestamp,true_expected_kw,injected_deficit_kwh") {
    throw std::runtime_error(path + ": not a truth csv");
  }
  std::vector<TruthPoint> truth;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split_csv_line(lines[i]);
    if (f.size() != 3) throw std::runtime_error(path + ": bad truth row");
    const auto ts = parse_iso8601_utc(f[0]);
    const auto expected = parse_double(f[1]);
    const auto deficit = parse_double(f[2]);
    if (!ts || !expected || !deficit) {
      throw std::runtime_error(path + ": bad truth row");
    }
    truth.push_back({*ts, *expected, *deficit});
  }
  return truth;
}

}  // namespace windsentry

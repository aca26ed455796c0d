// SPDX-License-Identifier: Apache-2.0
//
// aerobeam - position-based beamforming for air-to-ground mmWave links
// Copyright (C) 2026 The aerobeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "aerobeam/config.hpp"

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace aerobeam {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct Quantity {
  double value;
  std::string unit;
};

Quantity split_quantity(std::string_view key, std::string_view text) {
  const std::string s(trim(text));
  if (s.empty()) throw ConfigError(std::string(key), "missing value");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || errno == ERANGE) {
    throw ConfigError(std::string(key), "expected a number, got '" + s + "'");
  }
  return {v, std::string(trim(std::string_view(end)))};
}

[[noreturn]] void bad_unit(std::string_view key, const std::string& unit, const char* allowed) {
  throw ConfigError(std::string(key), "unit '" + unit + "' not one of " + allowed);
}

double power_value(std::string_view key, std::string_view text) {
  const Quantity q = split_quantity(key, text);
  if (q.unit.empty() || q.unit == "W") return q.value;
  if (q.unit == "mW") return 1e-3 * q.value;
  if (q.unit == "dBm") return 1e-3 * db_to_linear(q.value);
  if (q.unit == "dBW") return db_to_linear(q.value);
  bad_unit(key, q.unit, "W, mW, dBm, dBW");
}

double ratio_value(std::string_view key, std::string_view text) {
  const Quantity q = split_quantity(key, text);
  if (q.unit.empty()) return q.value;
  if (q.unit == "dB") return std::isinf(q.value) && q.value > 0 ? q.value : db_to_linear(q.value);
  bad_unit(key, q.unit, "dB or none");
}

double frequency_value(std::string_view key, std::string_view text) {
  const Quantity q = split_quantity(key, text);
  if (q.unit.empty() || q.unit == "Hz") return q.value;
  if (q.unit == "kHz") return 1e3 * q.value;
  if (q.unit == "MHz") return 1e6 * q.value;
  if (q.unit == "GHz") return 1e9 * q.value;
  bad_unit(key, q.unit, "Hz, kHz, MHz, GHz");
}

double length_value(std::string_view key, std::string_view text) {
  const Quantity q = split_quantity(key, text);
  if (q.unit.empty() || q.unit == "m") return q.value;
  if (q.unit == "km") return 1e3 * q.value;
  bad_unit(key, q.unit, "m, km");
}

double angle_value(std::string_view key, std::string_view text) {
  const Quantity q = split_quantity(key, text);
  if (q.unit.empty() || q.unit == "rad") return q.value;
  if (q.unit == "deg") return q.value * kPi / 180.0;
  bad_unit(key, q.unit, "rad, deg");
}

double plain_value(std::string_view key, std::string_view text, const char* unit) {
  const Quantity q = split_quantity(key, text);
  if (q.unit.empty() || q.unit == unit) return q.value;
  bad_unit(key, q.unit, unit);
}

template <typename Int>
Int integer_value(std::string_view key, std::string_view text) {
  const std::string_view s = trim(text);
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError(std::string(key), "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

bool bool_value(std::string_view key, std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "true" || s == "on" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "off" || s == "0" || s == "no") return false;
  throw ConfigError(std::string(key), "expected true/false, got '" + std::string(s) + "'");
}

DopplerConfig& doppler_of(Scenario& s) {
  if (!s.doppler) s.doppler = DopplerConfig{};
  s.doppler->carrier = s.carrier;
  return *s.doppler;
}

}  // namespace

void apply_setting(RunConfig& cfg, std::string_view raw_key, std::string_view value) {
  const std::string_view key = trim(raw_key);
  Scenario& s = cfg.scenario;
  LinkBudget& b = s.budget;

  if (key == "macro_radius") s.macro_radius = length_value(key, value);
  else if (key == "micro_radius") s.micro_radius = length_value(key, value);
  else if (key == "reuse_factor") {
    if (integer_value<int>(key, value) != 7) throw ConfigError("reuse_factor", "only 7 is supported");
  }
  else if (key == "tiers") s.tiers = integer_value<int>(key, value);
  else if (key == "altitude") s.altitude = length_value(key, value);
  else if (key == "mci_distance") s.mci_distance = length_value(key, value);
  else if (key == "mci_azimuth") s.mci_azimuth = angle_value(key, value);
  else if (key == "array_side") s.array_side = integer_value<int>(key, value);
  else if (key == "carrier_frequency") {
    s.carrier = frequency_value(key, value);
    if (s.doppler) s.doppler->carrier = s.carrier;
  }
  else if (key == "rician_k") s.rician.k_factor = ratio_value(key, value);
  else if (key == "tx_power_per_element") b.tx_power_per_element = power_value(key, value);
  else if (key == "power_interpretation") {
    const std::string_view v = trim(value);
    if (v == "per_element") b.interpretation = PowerInterpretation::per_element;
    else if (v == "total_array") b.interpretation = PowerInterpretation::total_array;
    else throw ConfigError("power_interpretation", "expected per_element or total_array");
  }
  else if (key == "rx_gain") b.rx_gain = ratio_value(key, value);
  else if (key == "back_off") b.back_off = ratio_value(key, value);
  else if (key == "tx_loss") b.tx_loss = ratio_value(key, value);
  else if (key == "atmospheric_loss") b.atmospheric_loss = ratio_value(key, value);
  else if (key == "other_rx_loss") b.other_rx_loss = ratio_value(key, value);
  else if (key == "noise_temperature") b.noise_temperature = plain_value(key, value, "K");
  else if (key == "bandwidth") b.bandwidth = frequency_value(key, value);
  else if (key == "noise_figure") b.noise_figure = ratio_value(key, value);
  else if (key == "beamformer") {
    const auto d = parse_design(trim(value));
    if (!d) throw ConfigError("beamformer", "expected nsb, nsb_d or mpdrb");
    s.beamformer = *d;
  }
  else if (key == "doppler") {
    if (bool_value(key, value)) doppler_of(s);
    else s.doppler.reset();
  }
  else if (key == "airplane_speed") doppler_of(s).airplane_speed = plain_value(key, value, "m/s");
  else if (key == "heading") doppler_of(s).heading = angle_value(key, value);
  else if (key == "delta_vr") doppler_of(s).delta_vr = plain_value(key, value, "");
  else if (key == "position_offset") s.offset.delta = length_value(key, value);
  else if (key == "trials") s.mc.trials = integer_value<std::size_t>(key, value);
  else if (key == "channel_draws") s.mc.channel_draws = integer_value<std::size_t>(key, value);
  else if (key == "seed") s.mc.seed = integer_value<std::uint64_t>(key, value);
  else if (key == "monte_carlo") s.mc.monte_carlo = bool_value(key, value);
  else if (key == "workers") s.mc.workers = integer_value<unsigned>(key, value);
  else if (key == "output_dir") cfg.output_dir = std::string(trim(value));
  else if (key == "plot") cfg.plot = bool_value(key, value);
  else if (key == "verbosity") cfg.verbosity = integer_value<int>(key, value);
  else throw ConfigError(std::string(key), "unknown key");
}

void apply_assignment(RunConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError(std::string(trim(assignment)), "expected key=value");
  }
  apply_setting(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
}

RunConfig parse_config_text(std::string_view text, RunConfig base) {
  RunConfig cfg = std::move(base);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    apply_assignment(cfg, line);
  }
  cfg.scenario.validate();
  return cfg;
}

RunConfig parse_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), std::move(base));
}

std::string emit(const RunConfig& cfg) {
  std::string out = scenario_text(cfg.scenario, true);
  out += "output_dir=" + cfg.output_dir + '\n';
  out += std::string("plot=") + (cfg.plot ? "true" : "false") + '\n';
  out += "verbosity=" + std::to_string(cfg.verbosity) + '\n';
  return out;
}

}  // namespace aerobeam

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

#include "aerobeam/sim.hpp"

#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "aerobeam/metrics.hpp"

namespace aerobeam {

void Scenario::validate() const {
  auto require = [](bool ok, const char* key, const char* range) {
    if (!ok) throw ConfigError(key, std::string("expected ") + range);
  };
  require(macro_radius > 0.0 && std::isfinite(macro_radius), "macro_radius", "a positive length");
  require(micro_radius > 0.0 && std::isfinite(micro_radius), "micro_radius", "a positive length");
  require(micro_radius < macro_radius, "micro_radius", "a radius below macro_radius");
  require(tiers >= 1 && tiers <= 5, "tiers", "an integer in [1, 5]");
  require(altitude > 0.0 && std::isfinite(altitude), "altitude", "a positive height");
  require(mci_distance >= 0.0 && mci_distance <= macro_radius, "mci_distance",
          "a distance in [0, macro_radius]");
  require(std::isfinite(mci_azimuth), "mci_azimuth", "a finite angle");
  require(array_side >= 1 && array_side <= 4096, "array_side", "an integer in [1, 4096]");
  require(carrier > 0.0 && std::isfinite(carrier), "carrier_frequency", "a positive frequency");
  require(rician.k_factor >= 0.0, "rician_k", "a non-negative ratio (inf for LoS only)");
  require(budget.tx_power_per_element > 0.0, "tx_power_per_element", "a positive power");
  require(budget.rx_gain > 0.0, "rx_gain", "a positive gain");
  require(budget.back_off > 0.0, "back_off", "a positive loss");
  require(budget.tx_loss > 0.0, "tx_loss", "a positive loss");
  require(budget.atmospheric_loss > 0.0, "atmospheric_loss", "a positive loss");
  require(budget.other_rx_loss > 0.0, "other_rx_loss", "a positive loss");
  require(budget.noise_temperature > 0.0, "noise_temperature", "a positive temperature");
  require(budget.bandwidth > 0.0, "bandwidth", "a positive bandwidth");
  require(budget.noise_figure > 0.0, "noise_figure", "a positive noise figure");
  if (doppler) {
    require(doppler->airplane_speed >= 0.0 && doppler->airplane_speed < kSpeedOfLight,
            "airplane_speed", "a speed in [0, c)");
    require(std::abs(doppler->delta_vr) <= 1.0, "delta_vr", "a value in [-1, 1]");
    require(std::isfinite(doppler->heading), "heading", "a finite angle");
  }
  require(offset.delta >= 0.0 && std::isfinite(offset.delta), "position_offset",
          "a non-negative length");
  require(mc.trials >= 1, "trials", "at least 1");
  require(!mc.monte_carlo || mc.channel_draws >= 1, "channel_draws", "at least 1");
}

Scene sample_scene(const Scenario& s, std::size_t trial) {
  const CellLayout layout =
      build_layout(s.macro_radius, s.micro_radius, s.tiers, s.mci_center());
  RandomStream placement(s.mc.seed, trial, StreamPurpose::placement);
  Scene scene;
  scene.users.reserve(layout.interferer_centers.size() + 1);
  scene.users.push_back(sample_uniform_in_disc(layout.mci_center, s.micro_radius, placement));
  for (const auto& c : layout.interferer_centers) {
    scene.users.push_back(sample_uniform_in_disc(c, s.micro_radius, placement));
  }
  RandomStream offsets(s.mc.seed, trial, StreamPurpose::position_offset);
  scene.measured = apply_position_offset(scene.users, s.offset, offsets);
  return scene;
}

TrialOutcome run_trial(const Scenario& s, std::size_t trial) {
  const Scene scene = sample_scene(s, trial);
  const ArrayGeometry geom = ArrayGeometry::for_carrier(s.array_side, s.carrier);

  std::vector<DirectionAngles> design_angles;
  design_angles.reserve(scene.measured.size());
  for (const auto& p : scene.measured) design_angles.push_back(angles_of(p));

  TrialOutcome out;
  try {
    const SteeringBank bank(geom, design_angles, s.beamformer == Design::nsb_d);
    const BeamformerSet beams = design_beamformers(bank, s.beamformer);

    const DirectionAngles served = angles_of(scene.users.front());
    const ArrayColumn served_los =
        s.doppler ? apply_frequency_mismatch(*s.doppler, served) : steering_column(served);

    const double pr = received_power(s.budget, s.array_side,
                                     scene.users.front().slant_distance(), s.carrier);
    const double noise = noise_power(s.budget);

    const BeamResponses responses = beam_responses(beams, served_los);
    const SinrMoments m = moments_generic(beams, served_los, s.rician);
    out.se_approx = approx_capacity(m, pr, noise);

    if (s.mc.monte_carlo) {
      RandomStream channel(s.mc.seed, trial, StreamPurpose::channel);
      MeanAccumulator acc;
      for (std::size_t d = 0; d < s.mc.channel_draws; ++d) {
        const Complex h = channel.complex_normal();
        acc.add(std::log2(1.0 + sinr_for_draw(responses, h, pr, noise, s.rician)));
      }
      out.se_mc = acc.mean();
    }
  } catch (const DegenerateDirections& e) {
    throw e.with_trial(trial);
  }
  return out;
}

namespace {

unsigned resolve_workers(unsigned requested, std::size_t trials) {
  unsigned w = requested;
  if (w == 0) w = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(w, trials));
}

}  // namespace

CapacityReport run_point(const Scenario& s) {
  s.validate();
  const std::size_t n = s.mc.trials;
  std::vector<TrialOutcome> results(n);
  std::vector<std::exception_ptr> errors(n);

  const unsigned workers = resolve_workers(s.mc.workers, n);
  auto work = [&](unsigned first) {
    for (std::size_t t = first; t < n; t += workers) {
      try {
        results[t] = run_trial(s, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  MeanAccumulator se;
  MeanAccumulator se_mc;
  for (const auto& r : results) {
    se.add(r.se_approx);
    if (s.mc.monte_carlo) se_mc.add(r.se_mc);
  }
  const double d = s.reuse_distance();
  CapacityReport report;
  report.trials = n;
  report.se_approx = se.mean();
  report.ase_approx = ase_from_se(report.se_approx, d);
  report.stderr_se = se.standard_error();
  report.stderr_ase = ase_from_se(report.stderr_se, d);
  if (s.mc.monte_carlo) {
    report.se_mc = se_mc.mean();
    report.ase_mc = ase_from_se(*report.se_mc, d);
    report.stderr_se_mc = se_mc.standard_error();
  }
  return report;
}

namespace {

template <typename T, typename Apply>
SweepResult sweep(const Scenario& s, const char* axis, const std::vector<T>& values, Apply apply) {
  SweepResult out;
  out.axis_name = axis;
  out.seed = s.mc.seed;
  out.config_hash = config_hash(s);
  out.points.reserve(values.size());
  for (const T& v : values) {
    Scenario point = s;
    apply(point, v);
    out.points.push_back({static_cast<double>(v), run_point(point)});
  }
  return out;
}

}  // namespace

SweepResult sweep_distance(const Scenario& s, const std::vector<double>& distances) {
  return sweep(s, "mci_distance", distances, [](Scenario& p, double d) { p.mci_distance = d; });
}

SweepResult sweep_array(const Scenario& s, const std::vector<int>& sides) {
  return sweep(s, "array_side", sides, [](Scenario& p, int m) { p.array_side = m; });
}

SweepResult doppler_table(const Scenario& s, const std::vector<double>& deltas) {
  return sweep(s, "delta_vr", deltas, [](Scenario& p, double d) {
    DopplerConfig cfg = p.doppler.value_or(DopplerConfig{});
    cfg.carrier = p.carrier;
    cfg.delta_vr = d;
    p.doppler = cfg;
  });
}

SweepResult offset_table(const Scenario& s, const std::vector<double>& deltas) {
  return sweep(s, "position_offset", deltas, [](Scenario& p, double d) { p.offset.delta = d; });
}

namespace {

std::string number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string scenario_text(const Scenario& s, bool include_runtime) {
  std::string out;
  auto line = [&out](const char* key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };
  line("macro_radius", number(s.macro_radius));
  line("micro_radius", number(s.micro_radius));
  line("reuse_factor", "7");
  line("tiers", std::to_string(s.tiers));
  line("altitude", number(s.altitude));
  line("mci_distance", number(s.mci_distance));
  line("mci_azimuth", number(s.mci_azimuth));
  line("array_side", std::to_string(s.array_side));
  line("carrier_frequency", number(s.carrier));
  line("rician_k", number(s.rician.k_factor));
  line("tx_power_per_element", number(s.budget.tx_power_per_element));
  line("power_interpretation", s.budget.interpretation == PowerInterpretation::per_element
                                   ? "per_element"
                                   : "total_array");
  line("rx_gain", number(s.budget.rx_gain));
  line("back_off", number(s.budget.back_off));
  line("tx_loss", number(s.budget.tx_loss));
  line("atmospheric_loss", number(s.budget.atmospheric_loss));
  line("other_rx_loss", number(s.budget.other_rx_loss));
  line("noise_temperature", number(s.budget.noise_temperature));
  line("bandwidth", number(s.budget.bandwidth));
  line("noise_figure", number(s.budget.noise_figure));
  line("beamformer", std::string(to_string(s.beamformer)));
  line("doppler", s.doppler ? "on" : "off");
  if (s.doppler) {
    line("airplane_speed", number(s.doppler->airplane_speed));
    line("heading", number(s.doppler->heading));
    line("delta_vr", number(s.doppler->delta_vr));
  }
  line("position_offset", number(s.offset.delta));
  line("trials", std::to_string(s.mc.trials));
  line("channel_draws", std::to_string(s.mc.channel_draws));
  line("seed", std::to_string(s.mc.seed));
  line("monte_carlo", s.mc.monte_carlo ? "true" : "false");
  if (include_runtime) line("workers", std::to_string(s.mc.workers));
  return out;
}

std::uint64_t config_hash(const Scenario& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : scenario_text(s, false)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace aerobeam

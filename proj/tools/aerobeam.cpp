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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aerobeam/config.hpp"
#include "aerobeam/report.hpp"
#include "aerobeam/sim.hpp"

namespace {

using namespace aerobeam;

constexpr int kUsageError = 2;
constexpr int kDegenerate = 3;

struct Options {
  std::string config_path;
  std::vector<std::string> settings;
  std::optional<std::string> beamformer;
  std::optional<double> mci_km;
  std::optional<int> side;
  std::optional<double> k_db;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  bool mc = false;
  std::optional<std::string> out;
  bool plot = false;
  std::vector<double> values;
  int zenith_steps = 46;
  int azimuth_steps = 72;
  double max_zenith_deg = 60.0;
  std::size_t trial = 0;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "key=value configuration file");
  cmd->add_option("--set", o.settings, "override one key, e.g. --set rician_k=15dB");
  cmd->add_option("--beamformer", o.beamformer, "nsb, nsb_d or mpdrb");
  cmd->add_option("--mci-km", o.mci_km, "distance of the served micro-cell from the centre");
  cmd->add_option("-M,--array-side", o.side, "elements per array side");
  cmd->add_option("-K,--rician-k-db", o.k_db, "Rician factor in dB");
  cmd->add_option("--trials", o.trials, "placement trials per point");
  cmd->add_option("--seed", o.seed, "master seed");
  cmd->add_option("--workers", o.workers, "worker threads (0: all cores)");
  cmd->add_flag("--mc", o.mc, "also average channel draws");
  cmd->add_option("--out", o.out, "output directory (default $AEROBEAM_OUTPUT_DIR)");
  cmd->add_flag("--plot", o.plot, "write an SVG next to the CSV");
}

RunConfig resolve(const Options& o) {
  RunConfig cfg;
  if (const char* env = std::getenv("AEROBEAM_OUTPUT_DIR"); env && *env) cfg.output_dir = env;
  std::string text;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw ConfigError("config", "cannot read '" + o.config_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  for (const auto& s : o.settings) text += "\n" + s;
  if (o.beamformer) text += "\nbeamformer=" + *o.beamformer;
  if (o.mci_km) text += "\nmci_distance=" + std::to_string(*o.mci_km) + "km";
  if (o.side) text += "\narray_side=" + std::to_string(*o.side);
  if (o.k_db) text += "\nrician_k=" + std::to_string(*o.k_db) + "dB";
  if (o.trials) text += "\ntrials=" + std::to_string(*o.trials);
  if (o.seed) text += "\nseed=" + std::to_string(*o.seed);
  if (o.workers) text += "\nworkers=" + std::to_string(*o.workers);
  if (o.mc) text += "\nmonte_carlo=true";
  if (o.out) text += "\noutput_dir=" + *o.out;
  if (o.plot) text += "\nplot=true";
  return parse_config_text(text, cfg);
}

bool writes_files(const Options& o, const RunConfig& cfg) {
  const char* env = std::getenv("AEROBEAM_OUTPUT_DIR");
  return o.out.has_value() || (env && *env) || cfg.output_dir != ".";
}

void emit_sweep(const SweepResult& r, const RunConfig& cfg, const Options& o,
                const std::string& stem) {
  write_sweep_csv(std::cout, r);
  if (!writes_files(o, cfg)) return;
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  std::ofstream csv(dir / (stem + ".csv"));
  write_sweep_csv(csv, r);
  if (cfg.plot) {
    std::ofstream svg(dir / (stem + ".svg"));
    write_sweep_svg(svg, r);
  }
}

template <typename T>
std::vector<T> values_or(const std::vector<double>& given, std::vector<T> fallback) {
  if (given.empty()) return fallback;
  return std::vector<T>(given.begin(), given.end());
}

int run(const std::string& command, const Options& o) {
  RunConfig cfg = resolve(o);
  const Scenario& s = cfg.scenario;
  if (command == "point") {
    SweepResult r;
    r.axis_name = "mci_distance";
    r.seed = s.mc.seed;
    r.config_hash = config_hash(s);
    r.points.push_back({s.mci_distance, run_point(s)});
    emit_sweep(r, cfg, o, "point");
  } else if (command == "sweep-distance") {
    std::vector<double> metres;
    for (double km : values_or<double>(o.values, {0, 1, 2, 3, 4, 5})) metres.push_back(km * 1e3);
    emit_sweep(sweep_distance(s, metres), cfg, o, "sweep_distance");
  } else if (command == "sweep-array") {
    emit_sweep(sweep_array(s, values_or<int>(o.values, {200, 300, 400, 500})), cfg, o,
               "sweep_array");
  } else if (command == "doppler-table") {
    emit_sweep(doppler_table(s, values_or<double>(o.values, {-1, -0.5, 0, 0.5, 1})), cfg, o,
               "doppler_table");
  } else if (command == "offset-table") {
    emit_sweep(offset_table(s, values_or<double>(o.values, {0, 0.1, 0.5, 1})), cfg, o,
               "offset_table");
  } else if (command == "pattern") {
    s.validate();
    const Scene scene = sample_scene(s, o.trial);
    std::vector<DirectionAngles> angles;
    for (const auto& p : scene.measured) angles.push_back(angles_of(p));
    const SteeringBank bank(ArrayGeometry::for_carrier(s.array_side, s.carrier), angles,
                            s.beamformer == Design::nsb_d);
    const BeamformerSet set = design_beamformers(bank, s.beamformer);
    const auto samples = pattern_samples(set.weights(0), angles, o.zenith_steps,
                                         o.azimuth_steps, o.max_zenith_deg * kPi / 180.0);
    write_pattern_csv(std::cout, samples, s.mc.seed, config_hash(s));
    if (writes_files(o, cfg)) {
      const std::filesystem::path dir(cfg.output_dir);
      std::filesystem::create_directories(dir);
      std::ofstream csv(dir / "pattern.csv");
      write_pattern_csv(csv, samples, s.mc.seed, config_hash(s));
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Position-based beamforming for air-to-ground mmWave links"};
  app.require_subcommand(1);
  Options o;

  auto* point = app.add_subcommand("point", "ASE and SE at one operating point");
  auto* distance = app.add_subcommand("sweep-distance", "sweep the micro-cell distance");
  auto* array = app.add_subcommand("sweep-array", "sweep the array side M");
  auto* doppler = app.add_subcommand("doppler-table", "sweep the radial-velocity error");
  auto* offset = app.add_subcommand("offset-table", "sweep the position offset");
  auto* pattern = app.add_subcommand("pattern", "array pattern of the served beam");
  for (auto* cmd : {point, distance, array, doppler, offset, pattern}) add_common(cmd, o);
  distance->add_option("--values", o.values, "distances in km")->delimiter(',');
  array->add_option("--values", o.values, "array sides")->delimiter(',');
  doppler->add_option("--values", o.values, "relative radial-velocity errors")->delimiter(',');
  offset->add_option("--values", o.values, "offsets in m")->delimiter(',');
  pattern->add_option("--trial", o.trial, "placement trial to draw");
  pattern->add_option("--zenith-steps", o.zenith_steps, "grid rows")->check(CLI::PositiveNumber);
  pattern->add_option("--azimuth-steps", o.azimuth_steps, "grid columns")
      ->check(CLI::PositiveNumber);
  pattern->add_option("--max-zenith-deg", o.max_zenith_deg, "largest zenith on the grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsageError;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const DegenerateDirections& e) {
    std::cerr << "error: degenerate scenario: " << e.what() << '\n';
    return kDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

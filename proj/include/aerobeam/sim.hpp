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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aerobeam/beamform.hpp"
#include "aerobeam/channel.hpp"
#include "aerobeam/geometry.hpp"
#include "aerobeam/impairments.hpp"

namespace aerobeam {

struct MonteCarloSettings {
  std::size_t trials = 500;
  std::size_t channel_draws = 20;
  std::uint64_t seed = 1;
  bool monte_carlo = false;
  unsigned workers = 0;  // 0: one per hardware thread
};

struct Scenario {
  double macro_radius = 10000.0;  // m
  double micro_radius = 50.0;     // m
  int tiers = 5;
  double altitude = 10000.0;      // m
  double mci_distance = 2500.0;   // m, from the macro-cell centre
  double mci_azimuth = kPi / 4;   // rad
  int array_side = 200;
  double carrier = 73.5e9;        // Hz
  RicianConfig rician = RicianConfig::from_db(30.0);
  LinkBudget budget;
  Design beamformer = Design::nsb;
  std::optional<DopplerConfig> doppler;
  PositionOffset offset;
  MonteCarloSettings mc;

  double reuse_distance() const { return reuse_distance_for(micro_radius); }
  GroundPosition mci_center() const { return point_at(mci_distance, mci_azimuth, altitude); }

  /// Throws ConfigError naming the first offending key.
  void validate() const;
};

struct CapacityReport {
  double se_approx = 0.0;
  double ase_approx = 0.0;
  double stderr_se = 0.0;
  double stderr_ase = 0.0;
  std::optional<double> se_mc;
  std::optional<double> ase_mc;
  std::optional<double> stderr_se_mc;
  std::size_t trials = 0;
};

/// One placement: true positions (index 0 served) and those the beams are
/// designed from.
struct Scene {
  std::vector<GroundPosition> users;
  std::vector<GroundPosition> measured;
};

Scene sample_scene(const Scenario& s, std::size_t trial);

struct TrialOutcome {
  double se_approx = 0.0;
  double se_mc = 0.0;
};

TrialOutcome run_trial(const Scenario& s, std::size_t trial);

CapacityReport run_point(const Scenario& s);

struct SweepPoint {
  double axis = 0.0;
  CapacityReport report;
};

struct SweepResult {
  std::string axis_name;
  std::vector<SweepPoint> points;
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;
};

SweepResult sweep_distance(const Scenario& s, const std::vector<double>& distances);
SweepResult sweep_array(const Scenario& s, const std::vector<int>& sides);
SweepResult doppler_table(const Scenario& s, const std::vector<double>& deltas);
SweepResult offset_table(const Scenario& s, const std::vector<double>& deltas);

/// Canonical key=value listing, one per line, sorted as declared.
std::string scenario_text(const Scenario& s, bool include_runtime = true);
/// FNV-1a of the scenario text without runtime-only keys.
std::uint64_t config_hash(const Scenario& s);

}  // namespace aerobeam

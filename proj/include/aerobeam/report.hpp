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

#include <iosfwd>
#include <string>
#include <vector>

#include "aerobeam/sim.hpp"

namespace aerobeam {

/// Comment line, header, then one row per point. Absent Monte Carlo values
/// are written as nan.
///   # aerobeam sweep axis=<name> seed=<n> config_hash=<16 hex digits>
///   axis,se_approx,ase_approx,se_mc,ase_mc,stderr_se,stderr_ase,trials,seed
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

/// Minimal line plot of ase_approx (and ase_mc when present) over the axis.
void write_sweep_svg(std::ostream& out, const SweepResult& sweep);

struct PatternSample {
  double zenith_deg = 0.0;
  double azimuth_deg = 0.0;
  double power_db = 0.0;
};

/// |w^H e|^2 in dB (floored at -400 dB) towards every bank user first, then
/// over a zenith x azimuth grid covering [0, max_zenith] x [-180, 180).
std::vector<PatternSample> pattern_samples(const BeamformerWeights& w,
                                           const std::vector<DirectionAngles>& users,
                                           int zenith_steps, int azimuth_steps,
                                           double max_zenith);

/// zenith_deg,azimuth_deg,power_db after a metadata comment line.
void write_pattern_csv(std::ostream& out, const std::vector<PatternSample>& samples,
                       std::uint64_t seed, std::uint64_t hash);

std::string hex_hash(std::uint64_t hash);

}  // namespace aerobeam

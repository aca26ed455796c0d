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

#include <vector>

#include "aerobeam/array.hpp"
#include "aerobeam/geometry.hpp"
#include "aerobeam/rng.hpp"

namespace aerobeam {

struct DopplerConfig {
  double airplane_speed = 200.0;  // m/s
  double heading = 0.0;           // rad, azimuth of the velocity vector
  double delta_vr = 0.0;          // relative error of the radial-velocity estimate
  double carrier = 73.5e9;        // Hz
};

/// v_a cos(azimuth - heading) sin(zenith)
double radial_velocity(const DopplerConfig& cfg, const DirectionAngles& angles);

/// (1 + delta_vr) v_r
double estimated_radial_velocity(const DopplerConfig& cfg, double radial);

/// f_c (1 + v/c) / (1 - v/c) for the estimated radial velocity v.
double precompensated_tx_frequency(const DopplerConfig& cfg, double estimated_radial);

/// Frequency seen by the user for a transmission at `tx_frequency`.
double received_frequency(double tx_frequency, double radial);

/// Received carrier over f_c after pre-compensation. Equals the ratio of the
/// radiated frequency to the one a perfect estimate would have used, and is
/// exactly 1 when delta_vr = 0.
double residual_frequency_ratio(const DopplerConfig& cfg, const DirectionAngles& angles);

/// Steering column of the served user's channel, radiated at the
/// pre-compensated frequency while the beams stay designed for f_c.
ArrayColumn apply_frequency_mismatch(const DopplerConfig& cfg, const DirectionAngles& angles);

/// Worst-case phase error across an M x M array, 2 pi (M/2) |ratio - 1|.
double mismatch_phase_bound(int side, double frequency_ratio);

struct PositionOffset {
  double delta = 0.0;  // m
};

/// Positions as measured: each moved by delta in a direction beta drawn
/// uniformly on (-pi, pi]. delta = 0 returns the input untouched.
std::vector<GroundPosition> apply_position_offset(const std::vector<GroundPosition>& positions,
                                                  const PositionOffset& offset,
                                                  RandomStream& rng);

}  // namespace aerobeam

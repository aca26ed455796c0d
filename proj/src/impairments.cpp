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

#include "aerobeam/impairments.hpp"

namespace aerobeam {

double radial_velocity(const DopplerConfig& cfg, const DirectionAngles& angles) {
  return cfg.airplane_speed * std::cos(angles.azimuth - cfg.heading) * std::sin(angles.zenith);
}

double estimated_radial_velocity(const DopplerConfig& cfg, double radial) {
  return (1.0 + cfg.delta_vr) * radial;
}

double precompensated_tx_frequency(const DopplerConfig& cfg, double estimated_radial) {
  const double beta = estimated_radial / kSpeedOfLight;
  if (!(std::abs(beta) < 1.0)) throw std::invalid_argument("radial velocity must be below c");
  return cfg.carrier * (1.0 + beta) / (1.0 - beta);
}

double received_frequency(double tx_frequency, double radial) {
  const double beta = radial / kSpeedOfLight;
  return tx_frequency * (1.0 - beta) / (1.0 + beta);
}

double residual_frequency_ratio(const DopplerConfig& cfg, const DirectionAngles& angles) {
  const double v = radial_velocity(cfg, angles) / kSpeedOfLight;
  const double v_est = estimated_radial_velocity(cfg, radial_velocity(cfg, angles)) / kSpeedOfLight;
  // Same factors in both products when the estimate is exact.
  return ((1.0 - v) * (1.0 + v_est)) / ((1.0 + v) * (1.0 - v_est));
}

ArrayColumn apply_frequency_mismatch(const DopplerConfig& cfg, const DirectionAngles& angles) {
  return steering_column(angles, residual_frequency_ratio(cfg, angles));
}

double mismatch_phase_bound(int side, double frequency_ratio) {
  return 2.0 * kPi * (0.5 * side) * std::abs(frequency_ratio - 1.0);
}

std::vector<GroundPosition> apply_position_offset(const std::vector<GroundPosition>& positions,
                                                  const PositionOffset& offset,
                                                  RandomStream& rng) {
  if (!(offset.delta >= 0.0)) throw std::invalid_argument("position offset must be non-negative");
  if (offset.delta == 0.0) return positions;
  std::vector<GroundPosition> out = positions;
  for (auto& p : out) {
    const double beta = kPi - 2.0 * kPi * rng.uniform();
    p.x += offset.delta * std::cos(beta);
    p.y += offset.delta * std::sin(beta);
  }
  return out;
}

}  // namespace aerobeam

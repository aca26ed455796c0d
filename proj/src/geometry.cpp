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

#include "aerobeam/geometry.hpp"

namespace aerobeam {

DirectionAngles angles_of(const GroundPosition& pos) {
  if (!(pos.depth > 0.0)) {
    throw std::invalid_argument("angles_of: depth must be positive");
  }
  DirectionAngles out;
  // Magnitude of the depth keeps the zenith in [0, pi/2).
  out.zenith = std::atan(pos.horizontal_distance() / pos.depth);
  if (pos.x == 0.0 && pos.y == 0.0) {
    out.azimuth = 0.0;
  } else {
    out.azimuth = std::atan2(pos.y, pos.x);
    if (out.azimuth == -kPi) out.azimuth = kPi;
  }
  return out;
}

DirectionCosines direction_cosines(const DirectionAngles& angles) {
  const double s = std::sin(angles.zenith);
  return {s * std::cos(angles.azimuth), s * std::sin(angles.azimuth)};
}

CellLayout build_layout(double macro_radius, double micro_radius, int tiers,
                        const GroundPosition& mci_center) {
  if (!(macro_radius > 0.0)) throw std::invalid_argument("macro_radius must be positive");
  if (!(micro_radius > 0.0)) throw std::invalid_argument("micro_radius must be positive");
  if (tiers < 1) throw std::invalid_argument("tiers must be at least 1");

  CellLayout layout;
  layout.macro_radius = macro_radius;
  layout.micro_radius = micro_radius;
  layout.reuse_distance = reuse_distance_for(micro_radius);
  layout.tiers = tiers;
  layout.mci_center = mci_center;
  layout.interferer_centers.reserve(static_cast<std::size_t>(interferer_count(tiers)));
  for (int k = 1; k <= tiers; ++k) {
    const double ring = k * layout.reuse_distance;
    const int cells = 6 * k;
    for (int q = 0; q < cells; ++q) {
      const double phi = 2.0 * kPi * q / cells;
      layout.interferer_centers.push_back(
          {mci_center.x + ring * std::cos(phi), mci_center.y + ring * std::sin(phi),
           mci_center.depth});
    }
  }
  return layout;
}

GroundPosition point_at(double distance, double azimuth, double depth) {
  return {distance * std::cos(azimuth), distance * std::sin(azimuth), depth};
}

GroundPosition sample_uniform_in_disc(const GroundPosition& center, double radius,
                                      RandomStream& rng) {
  const double rho = radius * std::sqrt(rng.uniform());
  const double phi = 2.0 * kPi * rng.uniform();
  return {center.x + rho * std::cos(phi), center.y + rho * std::sin(phi), center.depth};
}

}  // namespace aerobeam

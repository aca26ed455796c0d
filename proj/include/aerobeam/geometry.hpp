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

#include "aerobeam/common.hpp"
#include "aerobeam/rng.hpp"

namespace aerobeam {

/// A ground point expressed relative to the array at the origin. The point
/// sits `depth` metres below the array plane.
struct GroundPosition {
  double x = 0.0;      // m
  double y = 0.0;      // m
  double depth = 0.0;  // m, > 0

  double horizontal_distance() const noexcept { return std::hypot(x, y); }
  double slant_distance() const noexcept { return std::sqrt(x * x + y * y + depth * depth); }
};

/// Zenith measured from the downward vertical, azimuth from the +x axis.
struct DirectionAngles {
  double zenith = 0.0;   // [0, pi/2)
  double azimuth = 0.0;  // (-pi, pi]
};

/// Planar projections (sin z cos a, sin z sin a) of a direction.
struct DirectionCosines {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const DirectionCosines&, const DirectionCosines&) = default;
};

DirectionAngles angles_of(const GroundPosition& pos);
DirectionCosines direction_cosines(const DirectionAngles& angles);

/// The micro-cell of interest together with its co-channel interfering tiers.
struct CellLayout {
  double macro_radius = 0.0;
  double micro_radius = 0.0;
  double reuse_distance = 0.0;
  int tiers = 0;
  GroundPosition mci_center;
  std::vector<GroundPosition> interferer_centers;  // tier by tier, 6k cells in tier k
};

/// Reuse distance for the reuse-7 layout.
inline double reuse_distance_for(double micro_radius) { return 4.0 * micro_radius; }

/// Number of interfering cells in the first `tiers` hexagonal tiers.
inline int interferer_count(int tiers) { return 3 * tiers * (tiers + 1); }

CellLayout build_layout(double macro_radius, double micro_radius, int tiers,
                        const GroundPosition& mci_center);

/// Ground point at horizontal distance `distance` and bearing `azimuth` from
/// the macro-cell centre.
GroundPosition point_at(double distance, double azimuth, double depth);

/// Area-uniform sample in the disc of the given radius around `center`.
/// Always consumes two uniforms from the stream.
GroundPosition sample_uniform_in_disc(const GroundPosition& center, double radius,
                                      RandomStream& rng);

}  // namespace aerobeam

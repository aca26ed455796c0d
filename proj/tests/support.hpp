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
#include "aerobeam/rng.hpp"

namespace aerobeam::testing {

/// Direction with zenith in [0, max_zenith) and azimuth in (-pi, pi].
inline DirectionAngles random_angles(RandomStream& rng, double max_zenith = 1.3) {
  return {max_zenith * rng.uniform(), kPi - 2.0 * kPi * rng.uniform()};
}

inline std::vector<DirectionAngles> random_users(RandomStream& rng, std::size_t n,
                                                 double max_zenith = 1.3) {
  std::vector<DirectionAngles> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(random_angles(rng, max_zenith));
  return out;
}

/// Columns are explicit steering vectors of `users`.
inline ComplexMatrix dense_steering(const ArrayGeometry& g, const std::vector<DirectionAngles>& users) {
  ComplexMatrix e(static_cast<Eigen::Index>(g.element_count()),
                  static_cast<Eigen::Index>(users.size()));
  for (std::size_t k = 0; k < users.size(); ++k) {
    e.col(static_cast<Eigen::Index>(k)) = steering_vector(g, users[k]).entries;
  }
  return e;
}

}  // namespace aerobeam::testing

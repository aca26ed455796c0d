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
#include <random>

#include "aerobeam/common.hpp"

namespace aerobeam {

/// Purpose tag mixed into the seed so that each consumer of randomness in a
/// trial owns an independent stream.
enum class StreamPurpose : std::uint64_t {
  placement = 1,
  position_offset = 2,
  channel = 3,
  scenario = 4,
};

/// Deterministic random stream. Streams derived from (seed, trial, purpose)
/// are reproducible regardless of which thread evaluates the trial.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);
  RandomStream(std::uint64_t master_seed, std::uint64_t trial, StreamPurpose purpose);

  /// Uniform on [0, 1).
  double uniform();
  /// Circularly-symmetric complex Gaussian with unit variance.
  Complex complex_normal();

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  std::normal_distribution<double> half_normal_{0.0, std::sqrt(0.5)};
};

}  // namespace aerobeam

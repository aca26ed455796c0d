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

#include "aerobeam/rng.hpp"

#include <vector>

namespace aerobeam {

namespace {

std::mt19937_64 seeded_engine(std::initializer_list<std::uint64_t> words) {
  std::vector<std::uint32_t> halves;
  halves.reserve(2 * words.size());
  for (std::uint64_t w : words) {
    halves.push_back(static_cast<std::uint32_t>(w & 0xffffffffu));
    halves.push_back(static_cast<std::uint32_t>(w >> 32));
  }
  std::seed_seq seq(halves.begin(), halves.end());
  return std::mt19937_64(seq);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : engine_(seeded_engine({seed})) {}

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t trial,
                           StreamPurpose purpose)
    : engine_(seeded_engine({master_seed, trial, static_cast<std::uint64_t>(purpose)})) {}

double RandomStream::uniform() { return uniform_(engine_); }

Complex RandomStream::complex_normal() {
  const double re = half_normal_(engine_);
  const double im = half_normal_(engine_);
  return {re, im};
}

}  // namespace aerobeam

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

#include <string>
#include <string_view>

#include "aerobeam/sim.hpp"

namespace aerobeam {

/// Everything a CLI run needs: the scenario plus output options.
struct RunConfig {
  Scenario scenario;
  std::string output_dir = ".";
  bool plot = false;
  int verbosity = 0;
};

/// Sets one key. Values accept unit suffixes; a bare number is read in SI or
/// linear units:
///   powers      W (default), mW, dBm, dBW
///   gains/ratios linear (default), dB
///   frequencies Hz (default), kHz, MHz, GHz
///   lengths     m (default), km
///   angles      rad (default), deg
/// dB values are converted once, here, as 10^(x/10). Throws ConfigError.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Applies a "key=value" assignment.
void apply_assignment(RunConfig& cfg, std::string_view assignment);

/// Parses key=value lines; '#' starts a comment. Validates the result.
RunConfig parse_config_text(std::string_view text, RunConfig base = {});
RunConfig parse_config_file(const std::string& path, RunConfig base = {});

/// Canonical text that parse_config_text reads back to an identical config.
std::string emit(const RunConfig& cfg);

}  // namespace aerobeam

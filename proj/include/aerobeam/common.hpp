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

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace aerobeam {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 3.0e8;  // m/s
// Kept at the value used by the reference link budget, not CODATA.
inline constexpr double kBoltzmann = 1.374e-23;  // J/K

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

/// Raised when two or more constraint directions coincide so that a
/// beamformer cannot separate them.
class DegenerateDirections : public std::runtime_error {
 public:
  explicit DegenerateDirections(const std::string& what,
                                std::optional<std::size_t> trial = std::nullopt)
      : std::runtime_error(what), trial_(trial) {}

  std::optional<std::size_t> trial() const noexcept { return trial_; }

  DegenerateDirections with_trial(std::size_t trial) const {
    return DegenerateDirections(
        std::string(what()) + " (trial " + std::to_string(trial) + ")", trial);
  }

 private:
  std::optional<std::size_t> trial_;
};

/// Invalid parameter; `key()` is the snake_case configuration key at fault.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::invalid_argument(key + ": " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace aerobeam

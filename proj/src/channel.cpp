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

#include "aerobeam/channel.hpp"

#include <limits>

namespace aerobeam {

RicianConfig RicianConfig::from_db(double k_db) {
  if (std::isinf(k_db) && k_db > 0) return line_of_sight();
  return RicianConfig{db_to_linear(k_db)};
}

RicianConfig RicianConfig::line_of_sight() {
  return RicianConfig{std::numeric_limits<double>::infinity()};
}

bool RicianConfig::pure_los() const noexcept { return std::isinf(k_factor); }

double RicianConfig::los_amplitude() const noexcept {
  if (pure_los()) return 1.0;
  return std::sqrt(k_factor / (1.0 + k_factor));
}

double RicianConfig::nlos_amplitude() const noexcept {
  if (pure_los()) return 0.0;
  return std::sqrt(1.0 / (1.0 + k_factor));
}

ChannelRealization sample_channel(const SteeringVector& e, const RicianConfig& cfg,
                                  RandomStream& rng) {
  // Drawn even for a pure LoS channel so streams stay aligned across K.
  const Complex h = rng.complex_normal();
  ChannelRealization out;
  out.nlos_scalar = h;
  out.vector = cfg.los_amplitude() * e.entries;
  if (!cfg.pure_los()) out.vector.array() += cfg.nlos_amplitude() * h;
  return out;
}

double LinkBudget::lumped_losses() const noexcept {
  return back_off * tx_loss * atmospheric_loss * other_rx_loss;
}

double LinkBudget::total_radiated_power(int side) const noexcept {
  return tx_power_per_element * tx_gain(side);
}

double LinkBudget::tx_gain(int side) const noexcept {
  return static_cast<double>(side) * static_cast<double>(side);
}

double LinkBudget::tx_power(int side) const noexcept {
  return interpretation == PowerInterpretation::per_element ? tx_power_per_element
                                                            : total_radiated_power(side);
}

double path_loss_linear(double distance, double frequency) {
  if (!(distance > 0.0)) throw std::invalid_argument("path_loss_linear: distance must be positive");
  if (!(frequency > 0.0)) throw std::invalid_argument("path_loss_linear: frequency must be positive");
  const double root = 4.0 * kPi * distance * frequency / kSpeedOfLight;
  return root * root;
}

double received_power(const LinkBudget& budget, int side, double distance, double frequency) {
  return budget.tx_power(side) * budget.tx_gain(side) * budget.rx_gain /
         (budget.lumped_losses() * path_loss_linear(distance, frequency));
}

double noise_power(const LinkBudget& budget) {
  return kBoltzmann * budget.noise_temperature * budget.bandwidth * budget.noise_figure;
}

}  // namespace aerobeam

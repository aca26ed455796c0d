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

#include "aerobeam/array.hpp"
#include "aerobeam/rng.hpp"

namespace aerobeam {

/// Rician factor as a linear LoS-to-scatter power ratio. Infinity selects a
/// pure line-of-sight channel.
struct RicianConfig {
  double k_factor = 1000.0;

  static RicianConfig from_db(double k_db);
  static RicianConfig line_of_sight();

  bool pure_los() const noexcept;
  /// sqrt(K / (1 + K))
  double los_amplitude() const noexcept;
  /// sqrt(1 / (1 + K))
  double nlos_amplitude() const noexcept;
};

/// h = sqrt(K/(1+K)) e + sqrt(1/(1+K)) h_s 1, where h_s is the scalar
/// scatter gain shared by every element.
struct ChannelRealization {
  ComplexVector vector;
  Complex nlos_scalar;
};

ChannelRealization sample_channel(const SteeringVector& e, const RicianConfig& cfg,
                                  RandomStream& rng);

enum class PowerInterpretation {
  per_element,  // P_t is the per-element power
  total_array,  // P_t is the per-element power times M^2
};

/// Link budget in linear units.
struct LinkBudget {
  double tx_power_per_element = 1e-3 * db_to_linear(5.0);  // W
  double rx_gain = db_to_linear(60.2);
  double back_off = db_to_linear(10.0);
  double tx_loss = db_to_linear(1.8);
  double atmospheric_loss = db_to_linear(7.9);
  double other_rx_loss = db_to_linear(1.8);
  double noise_temperature = 290.0;  // K
  double bandwidth = 714.0e6;        // Hz
  double noise_figure = db_to_linear(6.0);
  PowerInterpretation interpretation = PowerInterpretation::per_element;

  /// Back-off, transmitter, atmospheric and receiver losses combined.
  double lumped_losses() const noexcept;
  /// Power radiated by the whole array, p_el * M^2.
  double total_radiated_power(int side) const noexcept;
  /// Array gain, M^2.
  double tx_gain(int side) const noexcept;
  /// P_t as entered in the received-power formula.
  double tx_power(int side) const noexcept;
};

/// (4 pi d f / c)^2
double path_loss_linear(double distance, double frequency);

/// P_t G_t G_r / (lumped losses * path loss)
double received_power(const LinkBudget& budget, int side, double distance, double frequency);

/// k T B N_F
double noise_power(const LinkBudget& budget);

}  // namespace aerobeam

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

#include "aerobeam/beamform.hpp"
#include "aerobeam/channel.hpp"

namespace aerobeam {

/// First and second moments of the beam outputs X_u = h^H w_u through the
/// served user's channel. Entry 0 is the served beam.
struct SinrMoments {
  Complex mu;
  double sigma_s_sq = 0.0;
  std::vector<Complex> interference_mean;
  std::vector<double> sigma_i_sq;

  double signal_power() const noexcept { return std::norm(mu) + sigma_s_sq; }
  double interference_power() const noexcept;
};

/// Null-steering moments evaluated from the projector form: each beam is
/// e_i - E_i (E_i^H E_i)^+ E_i^H e_i with its own least-squares solve.
SinrMoments moments_nsb(const SteeringBank& bank, const RicianConfig& cfg);

/// mean = sqrt(K/(1+K)) e_0^H w, variance = |1^H w|^2 / (1+K)
SinrMoments moments_generic(const BeamformerWeights& w, const ArrayColumn& served_los,
                            const RicianConfig& cfg);
/// Moments for every beam of the set through the served user's channel,
/// whose LoS part is `served_los`.
SinrMoments moments_generic(const BeamformerSet& set, const ArrayColumn& served_los,
                            const RicianConfig& cfg);

/// e_0^H w_u and 1^H w_u for every beam; enough to evaluate any channel draw.
struct BeamResponses {
  ComplexVector los;
  ComplexVector nlos;
};

BeamResponses beam_responses(const BeamformerSet& set, const ArrayColumn& served_los);

/// P_r |X_0|^2 / (P_r sum_{i>0} |X_i|^2 + noise) for the scatter gain `h_s`.
double sinr_for_draw(const BeamResponses& r, Complex h_s, double received, double noise,
                     const RicianConfig& cfg);

/// One channel draw of the served user.
double instantaneous_sinr(const BeamformerSet& set, const ArrayColumn& served_los,
                          double received, double noise, const RicianConfig& cfg,
                          RandomStream& rng);

/// log2(1 + P_r E|X_0|^2 / (P_r sum E|X_i|^2 + noise))
double approx_capacity(const SinrMoments& m, double received, double noise);
double approx_capacity(const SinrMoments& m, const LinkBudget& budget, int side,
                       double distance, double frequency);

/// 4 se / (pi D^2) with D given in metres and the result per km^2.
double ase_from_se(double se, double reuse_distance);

/// Running mean and standard error with Neumaier-compensated sums.
class MeanAccumulator {
 public:
  void add(double x) noexcept;
  std::size_t count() const noexcept { return n_; }
  double mean() const noexcept;
  /// Zero for fewer than two samples.
  double standard_error() const noexcept;

 private:
  struct Sum {
    double value = 0.0;
    double compensation = 0.0;
    void add(double x) noexcept;
    double total() const noexcept { return value + compensation; }
  };
  std::size_t n_ = 0;
  Sum sum_;
  Sum sum_sq_;
};

}  // namespace aerobeam

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

#include "aerobeam/metrics.hpp"

#include <algorithm>

#include <Eigen/QR>

namespace aerobeam {

double SinrMoments::interference_power() const noexcept {
  double total = 0.0;
  for (std::size_t i = 0; i < sigma_i_sq.size(); ++i) {
    total += std::norm(interference_mean[i]) + sigma_i_sq[i];
  }
  return total;
}

SinrMoments moments_nsb(const SteeringBank& bank, const RicianConfig& cfg) {
  const auto n = static_cast<Eigen::Index>(bank.user_count());
  const ComplexMatrix g = bank.gram().topLeftCorner(n, n);
  const ArrayColumn ones[] = {nadir_column()};
  // ones_row(k) = 1^H e_k
  const ComplexMatrix ones_row =
      cross_gram(bank.geometry(), ones, bank.columns().subspan(0, bank.user_count()));
  const double a = cfg.los_amplitude();
  const double b2 = cfg.nlos_amplitude() * cfg.nlos_amplitude();

  SinrMoments m;
  for (Eigen::Index i = 0; i < n; ++i) {
    // Beam i: e_i minus its projection onto the other steering vectors.
    std::vector<Eigen::Index> others;
    for (Eigen::Index k = 0; k < n; ++k)
      if (k != i) others.push_back(k);
    const auto no = static_cast<Eigen::Index>(others.size());
    ComplexVector x = ComplexVector::Zero(no);
    if (no > 0) {
      ComplexMatrix gi(no, no);
      ComplexVector rhs(no);
      for (Eigen::Index q = 0; q < no; ++q) {
        rhs(q) = g(others[q], i);
        for (Eigen::Index p = 0; p < no; ++p) gi(p, q) = g(others[p], others[q]);
      }
      Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(gi);
      cod.setThreshold(kRankTolerance);
      x = cod.solve(rhs);
    }
    // e_0^H w_i and 1^H w_i
    Complex los = g(0, i);
    Complex nlos = ones_row(0, i);
    for (Eigen::Index q = 0; q < no; ++q) {
      los -= g(0, others[q]) * x(q);
      nlos -= ones_row(0, others[q]) * x(q);
    }
    if (i == 0) {
      m.mu = a * los;
      m.sigma_s_sq = b2 * std::norm(nlos);
    } else {
      m.interference_mean.push_back(a * los);
      m.sigma_i_sq.push_back(b2 * std::norm(nlos));
    }
  }
  return m;
}

SinrMoments moments_generic(const BeamformerWeights& w, const ArrayColumn& served_los,
                            const RicianConfig& cfg) {
  SinrMoments m;
  m.mu = cfg.los_amplitude() * w.project(served_los);
  const double b = cfg.nlos_amplitude();
  m.sigma_s_sq = b * b * std::norm(w.project(nadir_column()));
  return m;
}

BeamResponses beam_responses(const BeamformerSet& set, const ArrayColumn& served_los) {
  return BeamResponses{set.project(served_los), set.project(nadir_column())};
}

SinrMoments moments_generic(const BeamformerSet& set, const ArrayColumn& served_los,
                            const RicianConfig& cfg) {
  const BeamResponses r = beam_responses(set, served_los);
  const double a = cfg.los_amplitude();
  const double b2 = cfg.nlos_amplitude() * cfg.nlos_amplitude();
  SinrMoments m;
  m.mu = a * r.los(0);
  m.sigma_s_sq = b2 * std::norm(r.nlos(0));
  for (Eigen::Index u = 1; u < r.los.size(); ++u) {
    m.interference_mean.push_back(a * r.los(u));
    m.sigma_i_sq.push_back(b2 * std::norm(r.nlos(u)));
  }
  return m;
}

double sinr_for_draw(const BeamResponses& r, Complex h_s, double received, double noise,
                     const RicianConfig& cfg) {
  const double a = cfg.los_amplitude();
  const Complex scatter = cfg.nlos_amplitude() * std::conj(h_s);
  const double signal = std::norm(a * r.los(0) + scatter * r.nlos(0));
  double interference = 0.0;
  for (Eigen::Index u = 1; u < r.los.size(); ++u) {
    interference += std::norm(a * r.los(u) + scatter * r.nlos(u));
  }
  return received * signal / (received * interference + noise);
}

double instantaneous_sinr(const BeamformerSet& set, const ArrayColumn& served_los,
                          double received, double noise, const RicianConfig& cfg,
                          RandomStream& rng) {
  const Complex h = rng.complex_normal();
  return sinr_for_draw(beam_responses(set, served_los), h, received, noise, cfg);
}

double approx_capacity(const SinrMoments& m, double received, double noise) {
  const double signal = m.signal_power();
  if (signal == 0.0) return 0.0;
  return std::log2(1.0 + received * signal / (received * m.interference_power() + noise));
}

double approx_capacity(const SinrMoments& m, const LinkBudget& budget, int side,
                       double distance, double frequency) {
  return approx_capacity(m, received_power(budget, side, distance, frequency),
                         noise_power(budget));
}

double ase_from_se(double se, double reuse_distance) {
  if (!(reuse_distance > 0.0)) throw std::invalid_argument("ase_from_se: D must be positive");
  const double d_km = reuse_distance / 1000.0;
  return 4.0 * se / (kPi * d_km * d_km);
}

void MeanAccumulator::Sum::add(double x) noexcept {
  const double t = value + x;
  if (std::abs(value) >= std::abs(x)) {
    compensation += (value - t) + x;
  } else {
    compensation += (x - t) + value;
  }
  value = t;
}

void MeanAccumulator::add(double x) noexcept {
  ++n_;
  sum_.add(x);
  sum_sq_.add(x * x);
}

double MeanAccumulator::mean() const noexcept {
  return n_ == 0 ? 0.0 : sum_.total() / static_cast<double>(n_);
}

double MeanAccumulator::standard_error() const noexcept {
  if (n_ < 2) return 0.0;
  const double n = static_cast<double>(n_);
  const double mu = mean();
  const double var = std::max(0.0, (sum_sq_.total() - n * mu * mu) / (n - 1.0));
  return std::sqrt(var / n);
}

}  // namespace aerobeam

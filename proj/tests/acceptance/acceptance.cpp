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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "aerobeam/metrics.hpp"
#include "aerobeam/sim.hpp"
#include "../support.hpp"

using namespace aerobeam;
using aerobeam::testing::random_angles;
using aerobeam::testing::random_users;

namespace {

int failures = 0;

void verdict(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool within(double value, double target, double tol) {
  return std::abs(value - target) <= tol * std::abs(target);
}

Scenario base(Design d) {
  Scenario s;
  s.beamformer = d;
  s.mc.trials = 500;
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

constexpr Design kDesigns[] = {Design::nsb, Design::nsb_d, Design::mpdrb};

// ---------------------------------------------------------------------------

void operating_point(std::vector<double>& ase) {
  const double target[] = {969, 909, 217};
  const double tol[] = {0.20, 0.20, 0.25};
  bool pass = true;
  std::string detail;
  for (int k = 0; k < 3; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    const CapacityReport r = run_point(base(kDesigns[k]));
    const double secs = seconds_since(t0);
    ase.push_back(r.ase_approx);
    const bool ok = within(r.ase_approx, target[k], tol[k]) && secs < 300;
    pass &= ok;
    detail += fmt("%s=%.1f(+/-%.1f, target %.0f, %.0fs) ", std::string(to_string(kDesigns[k])).c_str(),
                  r.ase_approx, r.stderr_ase, target[k], secs);
  }
  verdict(1, pass, detail);
}

void ordering(const std::vector<double>& seed1) {
  bool pass = seed1[0] > seed1[1] && seed1[1] > seed1[2];
  std::string detail = fmt("seed 1: %.1f > %.1f > %.1f", seed1[0], seed1[1], seed1[2]);
  for (std::uint64_t seed = 2; seed <= 5; ++seed) {
    double a[3];
    for (int k = 0; k < 3; ++k) {
      Scenario s = base(kDesigns[k]);
      s.mc.seed = seed;
      s.mc.trials = 200;
      a[k] = run_point(s).ase_approx;
    }
    const bool ok = a[0] > a[1] && a[1] > a[2];
    pass &= ok;
    detail += fmt("; seed %llu: %.1f > %.1f > %.1f", static_cast<unsigned long long>(seed), a[0],
                  a[1], a[2]);
  }
  verdict(2, pass, detail);
}

void doppler_robustness() {
  const std::vector<double> deltas{0.0, -1.0, -0.5, 0.5, 1.0};
  bool pass = true;
  std::string detail;
  for (Design d : kDesigns) {
    const SweepResult t = doppler_table(base(d), deltas);
    const double ref = t.points[0].report.ase_approx;
    double worst = 0;
    for (std::size_t k = 1; k < t.points.size(); ++k) {
      worst = std::max(worst, std::abs(t.points[k].report.ase_approx - ref) / ref);
    }
    pass &= worst < 0.02;
    detail += fmt("%s max |dASE|/ASE=%.2e ", std::string(to_string(d)).c_str(), worst);
  }
  verdict(3, pass, detail);
}

void position_mismatch() {
  const double reference_drop[] = {1 - 480.0 / 969, 1 - 867.0 / 908, 1 - 218.0 / 220};
  bool pass = true;
  std::string detail;
  double drop[3];
  for (int k = 0; k < 3; ++k) {
    const SweepResult t = offset_table(base(kDesigns[k]), {0.0, 1.0});
    drop[k] = 1 - t.points[1].report.ase_approx / t.points[0].report.ase_approx;
    pass &= std::abs(drop[k] - reference_drop[k]) <= 0.10;
    detail += fmt("%s %.1f->%.1f drop %.1f%% (reference %.1f%%) ",
                  std::string(to_string(kDesigns[k])).c_str(), t.points[0].report.ase_approx,
                  t.points[1].report.ase_approx, 100 * drop[k], 100 * reference_drop[k]);
  }
  pass &= drop[0] >= 0.40 && drop[0] <= 0.60 && drop[1] < 0.10 && drop[2] < 0.05;
  verdict(4, pass, detail);
}

void distance_shape() {
  const std::vector<double> km{0, 1, 2, 3, 4, 5};
  std::vector<double> metres;
  for (double k : km) metres.push_back(1000 * k);
  auto curve = [&](double k_db, double r) {
    Scenario s = base(Design::nsb);
    s.array_side = 500;
    s.rician = RicianConfig::from_db(k_db);
    s.micro_radius = r;
    std::vector<double> out;
    for (const auto& p : sweep_distance(s, metres).points) out.push_back(p.report.ase_approx);
    return out;
  };
  const auto k30 = curve(30, 50), k15 = curve(15, 50), k10 = curve(10, 50);
  const auto r75 = curve(30, 75), r100 = curve(30, 100);
  const double ratio = k30.back() / k30.front();
  bool a = ratio >= 1.5 && ratio <= 2.5, b = true, c = true;
  for (std::size_t i = 0; i < km.size(); ++i) {
    b &= k30[i] > k15[i] && k15[i] > k10[i];
    c &= k30[i] > r75[i] && r75[i] > r100[i];
  }
  std::string detail = fmt("(a) edge/centre=%.2f (%.1f/%.1f) (b) K order %s (c) r order %s; K30:",
                           ratio, k30.back(), k30.front(), b ? "ok" : "broken", c ? "ok" : "broken");
  for (double v : k30) detail += fmt(" %.0f", v);
  detail += " K15:";
  for (double v : k15) detail += fmt(" %.0f", v);
  detail += " K10:";
  for (double v : k10) detail += fmt(" %.0f", v);
  verdict(5, a && b && c, detail);
}

void array_trend() {
  auto ase = [](int side, double k_db) {
    Scenario s = base(Design::nsb);
    s.mci_distance = 0;
    s.array_side = side;
    s.rician = RicianConfig::from_db(k_db);
    return run_point(s).ase_approx;
  };
  const double m200k10 = ase(200, 10), m500k10 = ase(500, 10), m200k30 = ase(200, 30);
  const double d_m = m500k10 - m200k10, d_k = m200k30 - m200k10;
  const bool pass = d_m < d_k && within(d_m, 100, 0.4) && within(d_k, 250, 0.4);
  verdict(6, pass,
          fmt("M 200->500 at K=10dB: %.1f->%.1f (+%.1f, reference ~100); K 10->30dB at M=200: "
              "->%.1f (+%.1f, reference ~250)",
              m200k10, m500k10, d_m, m200k30, d_k));
}

void far_operating_point() {
  Scenario s = base(Design::nsb);
  s.array_side = 500;
  s.mci_distance = 5000;
  const CapacityReport r = run_point(s);
  const double d_km = s.reuse_distance() / 1000;
  const double identity = std::abs(r.ase_approx - 4 * r.se_approx / (kPi * d_km * d_km)) /
                          r.ase_approx;
  const bool pass = within(r.se_approx, 38, 0.2) && within(r.ase_approx, 1200, 0.2) &&
                    identity <= 1e-12 && s.reuse_distance() == 200;
  verdict(7, pass, fmt("SE=%.2f (target 38) ASE=%.1f (target 1200) at D=%.0f m, identity error %.1e",
                       r.se_approx, r.ase_approx, s.reuse_distance(), identity));
}

void null_depth() {
  RandomStream rng(2024);
  double worst_null = 0, worst_deriv = 0, worst_gain = 0;
  int scenarios = 0, skipped = 0;
  const int sides[] = {16, 32, 64};
  while (scenarios < 100) {
    const int side = sides[scenarios % 3];
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 14);
    const auto users = random_users(rng, n, 1.2);
    const ArrayGeometry g(side, 0.004);
    const SteeringBank bank(g, users, true);
    try {
      const ComplexMatrix b = bank.materialize();
      const ComplexMatrix e = b.leftCols(static_cast<Eigen::Index>(n));
      const double m2 = double(side) * side;
      for (Design d : {Design::nsb, Design::nsb_d}) {
        const ComplexMatrix w = b * design_beamformers(bank, d).coefficients();
        const ComplexMatrix eh_w = e.adjoint() * w;
        for (Eigen::Index i = 0; i < eh_w.cols(); ++i)
          for (Eigen::Index j = 0; j < eh_w.rows(); ++j)
            if (i != j) worst_null = std::max(worst_null, std::abs(eh_w(j, i)) / m2);
        if (d == Design::nsb_d) {
          const ComplexMatrix dh_w = b.rightCols(2 * static_cast<Eigen::Index>(n)).adjoint() * w;
          for (Eigen::Index r = 0; r < dh_w.rows(); ++r) {
            const double norm = b.col(static_cast<Eigen::Index>(n) + r).norm();
            if (norm == 0) continue;
            worst_deriv = std::max(worst_deriv, dh_w.row(r).cwiseAbs().maxCoeff() / (m2 * norm));
          }
        }
      }
      const ComplexMatrix w = b.leftCols(static_cast<Eigen::Index>(n)) *
                              design_beamformers(SteeringBank(g, users, false), Design::mpdrb)
                                  .coefficients()
                                  .topRows(static_cast<Eigen::Index>(n));
      for (Eigen::Index i = 0; i < w.cols(); ++i)
        worst_gain = std::max(worst_gain, std::abs(w.col(i).dot(e.col(i)) - 1.0));
      ++scenarios;
    } catch (const DegenerateDirections&) {
      ++skipped;
    }
  }
  verdict(8, worst_null <= 1e-6 && worst_deriv <= 1e-6 && worst_gain <= 1e-8,
          fmt("%d scenarios (%d degenerate redrawn): max |e_j^H w_i|/M^2=%.1e, derivative "
              "%.1e, max |w_i^H e_i - 1|=%.1e",
              scenarios, skipped, worst_null, worst_deriv, worst_gain));
}

void moment_oracle() {
  RandomStream rng(99);
  const int draws = 10000;
  int checks = 0, misses = 0;
  double worst_z = 0;
  for (int sc = 0; sc < 20; ++sc) {
    const int side = 8 + 4 * (sc % 3);
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 5);
    const auto users = random_users(rng, n, 1.2);
    const ArrayGeometry g(side, 0.004);
    const SteeringBank bank(g, users, false);
    const ComplexMatrix w = bank.materialize() * design_beamformers(bank, Design::nsb).coefficients();
    const SteeringVector e0 = steering_vector(g, users[0]);
    for (double k_db : {0.0, 10.0, 30.0}) {
      const RicianConfig cfg = RicianConfig::from_db(k_db);
      const SinrMoments m = moments_nsb(bank, cfg);
      RandomStream ch(1000 + static_cast<std::uint64_t>(sc) * 10 + static_cast<std::uint64_t>(k_db));
      std::vector<std::vector<Complex>> x(n);
      for (int k = 0; k < draws; ++k) {
        const ComplexVector h = sample_channel(e0, cfg, ch).vector;
        for (std::size_t u = 0; u < n; ++u) x[u].push_back(h.dot(w.col(static_cast<Eigen::Index>(u))));
      }
      for (std::size_t u = 0; u < n; ++u) {
        const Complex mean = u == 0 ? m.mu : m.interference_mean[u - 1];
        const double var = u == 0 ? m.sigma_s_sq : m.sigma_i_sq[u - 1];
        Complex s = 0;
        for (const auto& v : x[u]) s += v;
        const Complex emp_mean = s / double(draws);
        double s2 = 0;
        for (const auto& v : x[u]) s2 += std::norm(v - emp_mean);
        const double emp_var = s2 / (draws - 1);
        const double floor = 1e-9 * side * side;
        const double se_part = std::sqrt(var / 2 / draws) + floor;
        const double se_var = var / std::sqrt(double(draws)) + floor * floor;
        const double z[] = {std::abs(emp_mean.real() - mean.real()) / se_part,
                            std::abs(emp_mean.imag() - mean.imag()) / se_part,
                            std::abs(emp_var - var) / se_var};
        for (double zi : z) {
          ++checks;
          worst_z = std::max(worst_z, zi);
          if (zi > 4) ++misses;
        }
      }
    }
  }
  verdict(9, misses == 0,
          fmt("%d mean/variance checks over 20 scenarios x K in {0,10,30} dB, %d outside 4 "
              "standard errors, largest deviation %.2f SE",
              checks, misses, worst_z));
}

void inner_product_closed_form() {
  RandomStream rng(10);
  double worst = 0;
  for (int side : {4, 16, 64}) {
    const ArrayGeometry g(side, 0.004);
    for (int k = 0; k < 1000; ++k) {
      const auto a = steering_vector(g, random_angles(rng, kPi / 2));
      const auto b = steering_vector(g, random_angles(rng, kPi / 2));
      const Complex direct = inner_product(a, b);
      const double closed = steering_inner_product_closed_form(g, a.cosines, b.cosines);
      worst = std::max(worst, std::abs(direct - closed) / std::abs(direct));
    }
  }
  verdict(10, worst < 1e-10,
          fmt("3000 pairs, M in {4,16,64}: max relative error %.2e", worst));
}

void use_and_forget() {
  const double k_db[] = {10, 20, 30};
  const double km[] = {0, 2.5, 5};
  double worst = 0, null_gap_bits = 0;
  int count = 0, within_band = 0, null_count = 0;
  for (int idx = 0; count < 20; ++idx) {
    Scenario s = base(kDesigns[idx % 3]);
    s.rician = RicianConfig::from_db(k_db[(idx / 3) % 3]);
    s.mci_distance = 1000 * km[(idx / 9) % 3];
    s.array_side = idx % 2 ? 200 : 300;
    s.mc.trials = 40;
    s.mc.channel_draws = 200;
    s.mc.monte_carlo = true;
    s.mc.seed = 500 + static_cast<std::uint64_t>(idx);
    const CapacityReport r = run_point(s);
    const double gap = std::abs(*r.se_mc - r.se_approx) / *r.se_mc;
    worst = std::max(worst, gap);
    if (gap < 0.05) ++within_band;
    if (s.beamformer != Design::mpdrb) {
      null_gap_bits += *r.se_mc - r.se_approx;
      ++null_count;
    }
    ++count;
  }
  verdict(11, worst < 0.05,
          fmt("20 scenarios with K >= 10 dB: max |se_mc - se_approx|/se_mc = %.2e, %d of 20 "
              "within 5%%; null-steering mean se_mc - se_approx = %.3f bit/s/Hz "
              "(gamma/ln2 = %.3f)",
              worst, within_band, null_gap_bits / null_count, 0.5772156649015329 / std::log(2.0)));
}

void doppler_identity() {
  bool identical = true;
  for (Design d : kDesigns) {
    Scenario s = base(d);
    s.mc.trials = 30;
    s.mc.monte_carlo = true;
    s.mc.channel_draws = 10;
    Scenario t = s;
    t.doppler = DopplerConfig{};
    const CapacityReport a = run_point(s), b = run_point(t);
    identical &= a.se_approx == b.se_approx && *a.se_mc == *b.se_mc && a.stderr_se == b.stderr_se;
  }
  RandomStream rng(12);
  const double h = 1e-5;
  double worst = 0;
  for (int side : {16, 64}) {
    const ArrayGeometry g(side, 0.004);
    for (int k = 0; k < 100; ++k) {
      const auto a = random_angles(rng, 1.3);
      const auto d = steering_derivatives(g, a);
      const ComplexVector fd_az =
          (steering_vector(g, DirectionAngles{a.zenith, a.azimuth + h}).entries -
           steering_vector(g, DirectionAngles{a.zenith, a.azimuth - h}).entries) /
          (2 * h);
      const ComplexVector fd_ze =
          (steering_vector(g, DirectionAngles{a.zenith + h, a.azimuth}).entries -
           steering_vector(g, DirectionAngles{a.zenith - h, a.azimuth}).entries) /
          (2 * h);
      worst = std::max(worst, (fd_az - d.d_azimuth).norm() / d.d_azimuth.norm());
      worst = std::max(worst, (fd_ze - d.d_zenith).norm() / d.d_zenith.norm());
      worst = std::max(worst, (materialize(g, azimuth_derivative_column(a)) - fd_az).norm() /
                                  fd_az.norm());
      worst = std::max(worst, (materialize(g, zenith_derivative_column(a)) - fd_ze).norm() /
                                  fd_ze.norm());
    }
  }
  verdict(12, identical && worst < 1e-6,
          fmt("zero velocity error bit-identical: %s; derivative finite-difference max relative "
              "error %.2e",
              identical ? "yes" : "no", worst));
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> ase;
  operating_point(ase);
  ordering(ase);
  doppler_robustness();
  position_mismatch();
  distance_shape();
  array_trend();
  far_operating_point();
  null_depth();
  moment_oracle();
  inner_product_closed_form();
  use_and_forget();
  doppler_identity();
  std::printf("%d of 12 criteria failed, %.0f s\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}

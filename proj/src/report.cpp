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

#include "aerobeam/report.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>

namespace aerobeam {

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string("nan");
}

}  // namespace

std::string hex_hash(std::uint64_t hash) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "# aerobeam sweep axis=" << sweep.axis_name << " seed=" << sweep.seed
      << " config_hash=" << hex_hash(sweep.config_hash) << '\n';
  out << "axis,se_approx,ase_approx,se_mc,ase_mc,stderr_se,stderr_ase,trials,seed\n";
  for (const auto& p : sweep.points) {
    const CapacityReport& r = p.report;
    out << fmt(p.axis) << ',' << fmt(r.se_approx) << ',' << fmt(r.ase_approx) << ','
        << fmt(r.se_mc) << ',' << fmt(r.ase_mc) << ',' << fmt(r.stderr_se) << ','
        << fmt(r.stderr_ase) << ',' << r.trials << ',' << sweep.seed << '\n';
  }
}

void write_sweep_svg(std::ostream& out, const SweepResult& sweep) {
  constexpr double width = 640, height = 400, left = 70, right = 20, top = 30, bottom = 50;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
  double y1 = 0.0;
  for (const auto& p : sweep.points) {
    x0 = std::min(x0, p.axis);
    x1 = std::max(x1, p.axis);
    y1 = std::max(y1, p.report.ase_approx);
    if (p.report.ase_mc) y1 = std::max(y1, *p.report.ase_mc);
  }
  if (sweep.points.empty()) x0 = 0, x1 = 1;
  if (x1 == x0) x1 = x0 + 1;
  if (y1 <= 0) y1 = 1;
  y1 *= 1.1;
  auto sx = [&](double x) { return left + (x - x0) / (x1 - x0) * (width - left - right); };
  auto sy = [&](double y) { return height - bottom - y / y1 * (height - top - bottom); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << sy(0) << "\" x2=\"" << width - right
      << "\" y2=\"" << sy(0) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << sy(0) << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double y = y1 * k / 4;
    out << "<text x=\"" << left - 6 << "\" y=\"" << sy(y) + 4 << "\" text-anchor=\"end\">"
        << fmt(std::round(y)) << "</text>\n";
    const double x = x0 + (x1 - x0) * k / 4;
    out << "<text x=\"" << sx(x) << "\" y=\"" << height - bottom + 18
        << "\" text-anchor=\"middle\">" << fmt(x) << "</text>\n";
  }
  out << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 10
      << "\" text-anchor=\"middle\">" << sweep.axis_name << "</text>\n";
  out << "<text x=\"16\" y=\"" << (top + height - bottom) / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << (top + height - bottom) / 2
      << ")\">ASE (bps/Hz/km^2)</text>\n";

  auto polyline = [&](bool mc, const char* colour) {
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    for (const auto& p : sweep.points) {
      const double y = mc ? *p.report.ase_mc : p.report.ase_approx;
      out << sx(p.axis) << ',' << sy(y) << ' ';
    }
    out << "\"/>\n";
  };
  polyline(false, "#1f77b4");
  const bool has_mc = !sweep.points.empty() &&
                      std::all_of(sweep.points.begin(), sweep.points.end(),
                                  [](const SweepPoint& p) { return p.report.ase_mc.has_value(); });
  if (has_mc) polyline(true, "#d62728");
  out << "</svg>\n";
}

std::vector<PatternSample> pattern_samples(const BeamformerWeights& w,
                                           const std::vector<DirectionAngles>& users,
                                           int zenith_steps, int azimuth_steps,
                                           double max_zenith) {
  std::vector<DirectionAngles> dirs = users;
  for (int i = 0; i < zenith_steps; ++i) {
    const double ze = zenith_steps > 1 ? max_zenith * i / (zenith_steps - 1) : 0.0;
    for (int k = 0; k < azimuth_steps; ++k) {
      dirs.push_back({ze, -kPi + 2.0 * kPi * k / azimuth_steps});
    }
  }
  std::vector<ArrayColumn> probes;
  probes.reserve(dirs.size());
  for (const auto& d : dirs) probes.push_back(steering_column(d));
  const ComplexVector response =
      cross_gram(w.bank().geometry(), probes, w.bank().columns()) * w.coefficients();

  std::vector<PatternSample> out;
  out.reserve(dirs.size());
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const double power = std::norm(response(static_cast<Eigen::Index>(k)));
    out.push_back({dirs[k].zenith * 180.0 / kPi, dirs[k].azimuth * 180.0 / kPi,
                   std::max(-400.0, linear_to_db(power))});
  }
  return out;
}

void write_pattern_csv(std::ostream& out, const std::vector<PatternSample>& samples,
                       std::uint64_t seed, std::uint64_t hash) {
  out << "# aerobeam pattern seed=" << seed << " config_hash=" << hex_hash(hash) << '\n';
  out << "zenith_deg,azimuth_deg,power_db\n";
  for (const auto& s : samples) {
    out << fmt(s.zenith_deg) << ',' << fmt(s.azimuth_deg) << ',' << fmt(s.power_db) << '\n';
  }
}

}  // namespace aerobeam

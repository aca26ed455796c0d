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

#include "aerobeam/array.hpp"

#include <array>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace aerobeam {

namespace {

// x * c reduced modulo `period` without losing the low-order bits of the product.
double reduced_product(double x, double c, double period) {
  const double hi = x * c;
  const double lo = std::fma(x, c, -hi);
  return (hi - period * std::nearbyint(hi / period)) + lo;
}

// Phases offset_m * c for every element along one axis, reduced to [-1, 1] (units of pi).
// The product of a half-integer offset and a double fits the extended mantissa exactly.
std::vector<long double> axis_phases(int side, double c) {
  std::vector<long double> out(static_cast<std::size_t>(side));
  for (int m = 0; m < side; ++m) {
    const long double t = static_cast<long double>(m - 0.5 * (side - 1)) * c;
    out[static_cast<std::size_t>(m)] = t - 2.0L * std::nearbyint(t / 2.0L);
  }
  return out;
}

Complex polar_pi(long double turns) {
  constexpr long double pi = 3.141592653589793238462643383279502884L;
  const long double phase = pi * turns;
  return {static_cast<double>(std::cos(phase)), static_cast<double>(std::sin(phase))};
}

SteeringVector build_steering(const ArrayGeometry& geom, const DirectionCosines& c) {
  const int side = geom.side();
  const auto px = axis_phases(side, c.x);
  const auto py = axis_phases(side, c.y);
  SteeringVector out{ComplexVector(static_cast<Eigen::Index>(geom.element_count())), c};
  for (int m = 0; m < side; ++m) {
    for (int n = 0; n < side; ++n) {
      out.entries(static_cast<Eigen::Index>(geom.flat_index(m, n))) =
          polar_pi(px[static_cast<std::size_t>(m)] + py[static_cast<std::size_t>(n)]);
    }
  }
  return out;
}

}  // namespace

ArrayGeometry::ArrayGeometry(int side, double wavelength) : side_(side), wavelength_(wavelength) {
  if (side < 1) throw std::invalid_argument("array side must be at least 1");
  if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be positive");
}

ArrayGeometry ArrayGeometry::for_carrier(int side, double carrier_hz) {
  if (!(carrier_hz > 0.0)) throw std::invalid_argument("carrier frequency must be positive");
  return ArrayGeometry(side, kSpeedOfLight / carrier_hz);
}

SteeringVector steering_vector(const ArrayGeometry& geom, const DirectionAngles& angles,
                               double frequency_ratio) {
  const DirectionCosines c = direction_cosines(angles);
  return build_steering(geom, {c.x * frequency_ratio, c.y * frequency_ratio});
}

SteeringVector steering_vector(const ArrayGeometry& geom, const DirectionCosines& cosines) {
  return build_steering(geom, cosines);
}

DerivativePair steering_derivatives(const ArrayGeometry& geom, const DirectionAngles& angles,
                                    double frequency_ratio) {
  const double sz = std::sin(angles.zenith), cz = std::cos(angles.zenith);
  const double sa = std::sin(angles.azimuth), ca = std::cos(angles.azimuth);
  // d(psi)/d(angle) for psi = (sz ca, sz sa)
  const double dx_daz = -sz * sa, dy_daz = sz * ca;
  const double dx_dze = cz * ca, dy_dze = cz * sa;

  const SteeringVector e = steering_vector(geom, angles, frequency_ratio);
  const double k = 2.0 * kPi * frequency_ratio / geom.wavelength();
  const Complex j{0.0, 1.0};
  DerivativePair out{ComplexVector(e.entries.size()), ComplexVector(e.entries.size())};
  for (int m = 0; m < geom.side(); ++m) {
    for (int n = 0; n < geom.side(); ++n) {
      const auto idx = static_cast<Eigen::Index>(geom.flat_index(m, n));
      const double xm = geom.element_x(m), yn = geom.element_y(n);
      out.d_azimuth(idx) = j * k * (xm * dx_daz + yn * dy_daz) * e.entries(idx);
      out.d_zenith(idx) = j * k * (xm * dx_dze + yn * dy_dze) * e.entries(idx);
    }
  }
  return out;
}

Complex inner_product(const SteeringVector& a, const SteeringVector& b) {
  if (a.entries.size() != b.entries.size()) {
    throw std::invalid_argument("inner_product: vectors belong to different arrays");
  }
  long double re = 0.0L, im = 0.0L;
  for (Eigen::Index k = 0; k < a.entries.size(); ++k) {
    const Complex x = a.entries(k), y = b.entries(k);
    re += static_cast<long double>(y.real()) * x.real() + static_cast<long double>(y.imag()) * x.imag();
    im += static_cast<long double>(y.real()) * x.imag() - static_cast<long double>(y.imag()) * x.real();
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

double dirichlet_kernel(int side, double delta) {
  const double half = 0.5 * kPi * delta;
  const double s = std::sin(half);
  if (std::abs(s) < 1e-8) {
    // Near a grating peak the ratio is 0/0; sum the cosines directly.
    double acc = 0.0;
    for (int m = 0; m < side; ++m) acc += std::cos(kPi * (m - 0.5 * (side - 1)) * delta);
    return acc;
  }
  return std::sin(0.5 * kPi * reduced_product(side, delta, 4.0)) / s;
}

double steering_inner_product_closed_form(const ArrayGeometry& geom, const DirectionCosines& a,
                                          const DirectionCosines& b) {
  return dirichlet_kernel(geom.side(), a.x - b.x) * dirichlet_kernel(geom.side(), a.y - b.y);
}

ArrayColumn steering_column(const DirectionAngles& angles, double frequency_ratio) {
  const DirectionCosines c = direction_cosines(angles);
  return ArrayColumn{{c.x * frequency_ratio, c.y * frequency_ratio}};
}

ArrayColumn steering_column(const DirectionCosines& cosines) { return ArrayColumn{cosines}; }

ArrayColumn azimuth_derivative_column(const DirectionAngles& angles, double frequency_ratio) {
  ArrayColumn col = steering_column(angles, frequency_ratio);
  const double sz = std::sin(angles.zenith);
  const Complex jk{0.0, kPi * frequency_ratio};
  col.constant = 0.0;
  col.x_slope = jk * (-sz * std::sin(angles.azimuth));
  col.y_slope = jk * (sz * std::cos(angles.azimuth));
  return col;
}

ArrayColumn zenith_derivative_column(const DirectionAngles& angles, double frequency_ratio) {
  ArrayColumn col = steering_column(angles, frequency_ratio);
  const double cz = std::cos(angles.zenith);
  const Complex jk{0.0, kPi * frequency_ratio};
  col.constant = 0.0;
  col.x_slope = jk * (cz * std::cos(angles.azimuth));
  col.y_slope = jk * (cz * std::sin(angles.azimuth));
  return col;
}

ArrayColumn nadir_column() { return ArrayColumn{}; }

namespace {

Eigen::VectorXd index_offsets(int side) {
  Eigen::VectorXd a(side);
  for (int k = 0; k < side; ++k) a(k) = k - 0.5 * (side - 1);
  return a;
}

Eigen::VectorXcd line_phases(const Eigen::VectorXd& offsets, double cosine) {
  Eigen::VectorXcd p(offsets.size());
  for (Eigen::Index k = 0; k < offsets.size(); ++k) p(k) = std::polar(1.0, kPi * offsets(k) * cosine);
  return p;
}

// Coefficient of each moment product in left^H right, see ArrayColumn.
struct PairTerms {
  Complex x0y0, x1y0, x0y1, x2y0, x0y2, x1y1;
};

PairTerms pair_terms(const ArrayColumn& l, const ArrayColumn& r) {
  const Complex c0 = std::conj(l.constant), cx = std::conj(l.x_slope), cy = std::conj(l.y_slope);
  return {c0 * r.constant,
          c0 * r.x_slope + cx * r.constant,
          c0 * r.y_slope + cy * r.constant,
          cx * r.x_slope,
          cy * r.y_slope,
          cx * r.y_slope + cy * r.x_slope};
}

// Unique directions of a column list and the direction index of each column.
struct DirectionTable {
  std::vector<DirectionCosines> unique;
  std::vector<Eigen::Index> of_column;
};

DirectionTable tabulate(std::span<const ArrayColumn> columns) {
  DirectionTable t;
  std::map<std::pair<double, double>, Eigen::Index> seen;
  t.of_column.reserve(columns.size());
  for (const ArrayColumn& c : columns) {
    auto [it, inserted] = seen.try_emplace({c.cosines.x, c.cosines.y},
                                           static_cast<Eigen::Index>(t.unique.size()));
    if (inserted) t.unique.push_back(c.cosines);
    t.of_column.push_back(it->second);
  }
  return t;
}

// P(k, d) = exp(j pi a_k c_d) along one axis.
ComplexMatrix phase_matrix(const Eigen::VectorXd& offsets, const std::vector<DirectionCosines>& dirs,
                           bool along_x) {
  ComplexMatrix p(offsets.size(), static_cast<Eigen::Index>(dirs.size()));
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    p.col(static_cast<Eigen::Index>(d)) = line_phases(offsets, along_x ? dirs[d].x : dirs[d].y);
  }
  return p;
}

// moments[p](i, j) = sum_k a_k^p exp(j pi a_k (r_j - l_i)) for p = 0..order.
// The zeroth moment is the Dirichlet kernel; higher ones go through the
// phase matrices.
std::array<ComplexMatrix, 3> axis_moments(const Eigen::VectorXd& offsets, int side,
                                          const std::vector<DirectionCosines>& left,
                                          const std::vector<DirectionCosines>& right,
                                          bool along_x, int order) {
  std::array<ComplexMatrix, 3> out;
  const auto nl = static_cast<Eigen::Index>(left.size());
  const auto nr = static_cast<Eigen::Index>(right.size());
  out[0].resize(nl, nr);
  for (Eigen::Index j = 0; j < nr; ++j) {
    const double rj = along_x ? right[static_cast<std::size_t>(j)].x : right[static_cast<std::size_t>(j)].y;
    for (Eigen::Index i = 0; i < nl; ++i) {
      const double li = along_x ? left[static_cast<std::size_t>(i)].x : left[static_cast<std::size_t>(i)].y;
      out[0](i, j) = dirichlet_kernel(side, rj - li);
    }
  }
  if (order >= 1) {
    const ComplexMatrix r = phase_matrix(offsets, right, along_x);
    const ComplexMatrix l = (left == right) ? r : phase_matrix(offsets, left, along_x);
    const ComplexMatrix weighted = offsets.asDiagonal() * r;
    out[1].noalias() = l.adjoint() * weighted;
    if (order >= 2) {
      const ComplexMatrix weighted2 = offsets.asDiagonal() * weighted;
      out[2].noalias() = l.adjoint() * weighted2;
    }
  }
  return out;
}

std::array<Complex, 3> line_sums(const Eigen::VectorXd& offsets, double delta) {
  std::array<Complex, 3> s{};
  for (Eigen::Index k = 0; k < offsets.size(); ++k) {
    const double a = offsets(k);
    const Complex z = std::polar(1.0, kPi * a * delta);
    s[0] += z;
    s[1] += a * z;
    s[2] += a * a * z;
  }
  return s;
}

}  // namespace

ComplexVector materialize(const ArrayGeometry& geom, const ArrayColumn& column) {
  const int side = geom.side();
  const Eigen::VectorXd a = index_offsets(side);
  const Eigen::VectorXcd px = line_phases(a, column.cosines.x);
  const Eigen::VectorXcd py = line_phases(a, column.cosines.y);
  ComplexVector out(static_cast<Eigen::Index>(geom.element_count()));
  for (int m = 0; m < side; ++m) {
    for (int n = 0; n < side; ++n) {
      const Complex amp = column.constant + column.x_slope * a(m) + column.y_slope * a(n);
      out(static_cast<Eigen::Index>(geom.flat_index(m, n))) = amp * px(m) * py(n);
    }
  }
  return out;
}

Complex inner_product(const ArrayGeometry& geom, const ArrayColumn& a, const ArrayColumn& b) {
  const Eigen::VectorXd offsets = index_offsets(geom.side());
  const auto sx = line_sums(offsets, a.cosines.x - b.cosines.x);
  const auto sy = line_sums(offsets, a.cosines.y - b.cosines.y);
  const PairTerms t = pair_terms(b, a);
  return t.x0y0 * sx[0] * sy[0] + t.x1y0 * sx[1] * sy[0] + t.x0y1 * sx[0] * sy[1] +
         t.x2y0 * sx[2] * sy[0] + t.x0y2 * sx[0] * sy[2] + t.x1y1 * sx[1] * sy[1];
}

ComplexMatrix cross_gram(const ArrayGeometry& geom, std::span<const ArrayColumn> left,
                         std::span<const ArrayColumn> right) {
  const Eigen::VectorXd offsets = index_offsets(geom.side());
  const DirectionTable lt = tabulate(left);
  const DirectionTable rt = tabulate(right);

  const auto sloped = [](std::span<const ArrayColumn> cols) {
    for (const auto& c : cols)
      if (c.has_slope()) return true;
    return false;
  };
  const bool ls = sloped(left), rs = sloped(right);
  const int order = (ls && rs) ? 2 : ((ls || rs) ? 1 : 0);

  const auto mx = axis_moments(offsets, geom.side(), lt.unique, rt.unique, true, order);
  const auto my = axis_moments(offsets, geom.side(), lt.unique, rt.unique, false, order);

  const auto rows = static_cast<Eigen::Index>(left.size());
  const auto cols = static_cast<Eigen::Index>(right.size());
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Eigen::Index dj = rt.of_column[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 0; i < rows; ++i) {
      const Eigen::Index di = lt.of_column[static_cast<std::size_t>(i)];
      const PairTerms t = pair_terms(left[static_cast<std::size_t>(i)],
                                     right[static_cast<std::size_t>(j)]);
      Complex v = t.x0y0 * mx[0](di, dj) * my[0](di, dj);
      if (order >= 1) {
        v += t.x1y0 * mx[1](di, dj) * my[0](di, dj) + t.x0y1 * mx[0](di, dj) * my[1](di, dj);
      }
      if (order >= 2) {
        v += t.x2y0 * mx[2](di, dj) * my[0](di, dj) + t.x0y2 * mx[0](di, dj) * my[2](di, dj) +
             t.x1y1 * mx[1](di, dj) * my[1](di, dj);
      }
      g(i, j) = v;
    }
  }
  return g;
}

ComplexMatrix gram(const ArrayGeometry& geom, std::span<const ArrayColumn> columns) {
  ComplexMatrix g = cross_gram(geom, columns, columns);
  ComplexMatrix h = 0.5 * (g + g.adjoint());
  for (Eigen::Index k = 0; k < h.rows(); ++k) h(k, k) = h(k, k).real();
  return h;
}

}  // namespace aerobeam

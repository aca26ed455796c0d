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

#include <doctest.h>

#include "aerobeam/array.hpp"
#include "support.hpp"

using namespace aerobeam;
using aerobeam::testing::random_angles;

TEST_CASE("steering vector entries") {
  const ArrayGeometry g(6, 0.004);
  const auto nadir = steering_vector(g, DirectionAngles{0, 0});
  CHECK((nadir.entries.array() - Complex(1, 0)).abs().maxCoeff() == 0.0);

  RandomStream rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto e = steering_vector(g, random_angles(rng));
    CHECK(e.entries.squaredNorm() == doctest::Approx(36.0).epsilon(1e-13));
    CHECK((e.entries.array().abs() - 1.0).abs().maxCoeff() < 1e-12);
  }

  // Two elements per side at unit spacing, looking along +x.
  const ArrayGeometry two(2, 2.0);
  const auto e = steering_vector(two, DirectionCosines{1.0, 0.0});
  const Complex minus = std::polar(1.0, -kPi / 2), plus = std::polar(1.0, kPi / 2);
  CHECK(std::abs(e.entries(0) - minus) < 1e-15);
  CHECK(std::abs(e.entries(1) - minus) < 1e-15);
  CHECK(std::abs(e.entries(2) - plus) < 1e-15);
  CHECK(std::abs(e.entries(3) - plus) < 1e-15);
  CHECK(std::abs(inner_product(e, steering_vector(two, DirectionCosines{}))) < 1e-15);
}

TEST_CASE("element coordinates") {
  const ArrayGeometry g(5, 0.01);
  CHECK(g.spacing() == 0.005);
  CHECK(g.element_x(0) == doctest::Approx(-0.01));
  CHECK(g.element_x(2) == 0.0);
  CHECK(g.element_y(4) == doctest::Approx(0.01));
  CHECK(g.flat_index(1, 3) == 8);
  const auto f = ArrayGeometry::for_carrier(4, 73.5e9);
  CHECK(f.wavelength() == doctest::Approx(3e8 / 73.5e9));
}

TEST_CASE("steering derivatives against central differences") {
  const ArrayGeometry g(12, 0.004);
  RandomStream rng(9);
  const double h = 1e-5;
  for (int k = 0; k < 100; ++k) {
    const auto a = random_angles(rng);
    const auto d = steering_derivatives(g, a);
    const ComplexVector fd_az = (steering_vector(g, DirectionAngles{a.zenith, a.azimuth + h}).entries -
                                 steering_vector(g, DirectionAngles{a.zenith, a.azimuth - h}).entries) /
                                (2 * h);
    const ComplexVector fd_ze = (steering_vector(g, DirectionAngles{a.zenith + h, a.azimuth}).entries -
                                 steering_vector(g, DirectionAngles{a.zenith - h, a.azimuth}).entries) /
                                (2 * h);
    CHECK((fd_az - d.d_azimuth).norm() <= 1e-6 * d.d_azimuth.norm());
    CHECK((fd_ze - d.d_zenith).norm() <= 1e-6 * d.d_zenith.norm());
  }
}

TEST_CASE("derivatives at nadir") {
  const ArrayGeometry g(7, 2.0);
  const double az = 0.7;
  const auto d = steering_derivatives(g, {0.0, az});
  CHECK(d.d_azimuth.norm() == 0.0);
  for (int m = 0; m < 7; ++m) {
    for (int n = 0; n < 7; ++n) {
      const Complex expect{0.0, (2 * kPi / 2.0) *
                                    (g.element_x(m) * std::cos(az) + g.element_y(n) * std::sin(az))};
      CHECK(std::abs(d.d_zenith(static_cast<Eigen::Index>(g.flat_index(m, n))) - expect) < 1e-12);
    }
  }
}

TEST_CASE("separable inner product") {
  RandomStream rng(13);
  for (int side : {4, 16, 64}) {
    const ArrayGeometry g(side, 0.004);
    for (int k = 0; k < 50; ++k) {
      const auto a = steering_vector(g, random_angles(rng));
      const auto b = steering_vector(g, random_angles(rng));
      const Complex direct = inner_product(a, b);
      const double closed = steering_inner_product_closed_form(g, a.cosines, b.cosines);
      CHECK(std::abs(direct - closed) <= 1e-10 * std::abs(direct));
      CHECK(std::abs(inner_product(b, a) - std::conj(direct)) < 1e-12 * side * side);
      CHECK(std::abs(inner_product(a, a) - double(side * side)) < 1e-10);
    }
  }
}

TEST_CASE("Dirichlet kernel against the geometric series") {
  for (int side : {1, 2, 7, 200}) {
    for (double d : {0.0, 1e-12, 1e-9, 3e-7, 0.01, 0.3, 1.0, 2.0, -1.7}) {
      double sum = 0;
      for (int m = 0; m < side; ++m) sum += std::cos(kPi * (m - 0.5 * (side - 1)) * d);
      CHECK(dirichlet_kernel(side, d) == doctest::Approx(sum).epsilon(1e-9).scale(side));
    }
  }
}

TEST_CASE("analytic columns match explicit vectors") {
  const ArrayGeometry g(9, 0.004);
  RandomStream rng(21);
  std::vector<ArrayColumn> cols;
  std::vector<ComplexVector> dense;
  for (int k = 0; k < 6; ++k) {
    const auto a = random_angles(rng);
    const auto d = steering_derivatives(g, a);
    cols.push_back(steering_column(a));
    dense.push_back(steering_vector(g, a).entries);
    cols.push_back(azimuth_derivative_column(a));
    dense.push_back(d.d_azimuth);
    cols.push_back(zenith_derivative_column(a));
    dense.push_back(d.d_zenith);
  }
  cols.push_back(nadir_column());
  dense.push_back(ComplexVector::Ones(81));
  // A repeated direction exercises the shared-direction table.
  cols.push_back(cols[0]);
  dense.push_back(dense[0]);

  ComplexMatrix b(81, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    CHECK((materialize(g, cols[k]) - dense[k]).norm() < 1e-12 * (1 + dense[k].norm()));
    b.col(static_cast<Eigen::Index>(k)) = dense[k];
  }
  const ComplexMatrix expect = b.adjoint() * b;
  const ComplexMatrix got = gram(g, cols);
  CHECK((got - expect).norm() < 1e-11 * expect.norm());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      CHECK(std::abs(inner_product(g, cols[j], cols[i]) - expect(ii, jj)) <
            1e-11 * (1 + std::abs(expect(ii, jj)) + expect.norm() * 1e-3));
    }
  }

  const std::span<const ArrayColumn> all(cols);
  const ComplexMatrix cross = cross_gram(g, all.subspan(0, 4), all.subspan(3));
  CHECK((cross - b.leftCols(4).adjoint() * b.rightCols(b.cols() - 3)).norm() <
        1e-11 * expect.norm());
}

TEST_CASE("frequency ratio scales the phase gradient") {
  const ArrayGeometry g(8, 0.004);
  const DirectionAngles a{0.6, 0.4};
  const double ratio = 1.0 + 3e-6;
  const auto scaled = steering_vector(g, a, ratio);
  const auto col = steering_column(a, ratio);
  CHECK((materialize(g, col) - scaled.entries).norm() < 1e-12);
  CHECK(steering_column(a, 1.0).cosines == steering_column(a).cosines);
}

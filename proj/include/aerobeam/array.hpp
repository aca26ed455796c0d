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

#include <span>

#include "aerobeam/common.hpp"
#include "aerobeam/geometry.hpp"

namespace aerobeam {

/// Square M x M planar array with half-wavelength spacing, centred on the
/// origin. Element (m, n) sits at (a_m, a_n) * lambda / 2 with
/// a_k = k - (M - 1) / 2, k = 0..M-1. Vectors over the array are stored
/// row-major in (m, n).
class ArrayGeometry {
 public:
  ArrayGeometry(int side, double wavelength);
  static ArrayGeometry for_carrier(int side, double carrier_hz);

  int side() const noexcept { return side_; }
  std::size_t element_count() const noexcept {
    return static_cast<std::size_t>(side_) * static_cast<std::size_t>(side_);
  }
  double wavelength() const noexcept { return wavelength_; }
  double spacing() const noexcept { return 0.5 * wavelength_; }

  double index_offset(int k) const noexcept { return k - 0.5 * (side_ - 1); }
  double element_x(int m) const noexcept { return index_offset(m) * spacing(); }
  double element_y(int n) const noexcept { return index_offset(n) * spacing(); }
  std::size_t flat_index(int m, int n) const noexcept {
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(side_) +
           static_cast<std::size_t>(n);
  }

 private:
  int side_;
  double wavelength_;
};

struct SteeringVector {
  ComplexVector entries;
  DirectionCosines cosines;
};

struct DerivativePair {
  ComplexVector d_azimuth;
  ComplexVector d_zenith;
};

// `frequency_ratio` is f_on_air / f_design: the element positions stay fixed
// while the phase gradient scales with the radiated frequency.
SteeringVector steering_vector(const ArrayGeometry& geom, const DirectionAngles& angles,
                               double frequency_ratio = 1.0);
SteeringVector steering_vector(const ArrayGeometry& geom, const DirectionCosines& cosines);
DerivativePair steering_derivatives(const ArrayGeometry& geom, const DirectionAngles& angles,
                                    double frequency_ratio = 1.0);

/// b^H a by direct summation.
Complex inner_product(const SteeringVector& a, const SteeringVector& b);

/// sin(M pi d / 2) / sin(pi d / 2), the 1-D array sum for a direction-cosine
/// difference d at half-wavelength spacing.
double dirichlet_kernel(int side, double delta);

/// Separable closed form of b^H a for two steering vectors.
double steering_inner_product_closed_form(const ArrayGeometry& geom, const DirectionCosines& a,
                                          const DirectionCosines& b);

/// Analytic description of a vector over the array whose (m, n) entry is
///   (constant + x_slope * a_m + y_slope * a_n) * exp(j pi (a_m u + a_n v))
/// with (u, v) = `cosines`. Steering vectors, their angular derivatives and
/// the all-ones vector all belong to this family, so their inner products
/// reduce to products of 1-D sums.
struct ArrayColumn {
  DirectionCosines cosines;
  Complex constant{1.0, 0.0};
  Complex x_slope{0.0, 0.0};
  Complex y_slope{0.0, 0.0};

  bool has_slope() const noexcept { return x_slope != 0.0 || y_slope != 0.0; }
};

ArrayColumn steering_column(const DirectionAngles& angles, double frequency_ratio = 1.0);
ArrayColumn steering_column(const DirectionCosines& cosines);
ArrayColumn azimuth_derivative_column(const DirectionAngles& angles, double frequency_ratio = 1.0);
ArrayColumn zenith_derivative_column(const DirectionAngles& angles, double frequency_ratio = 1.0);
/// The all-ones vector (steering towards nadir).
ArrayColumn nadir_column();

ComplexVector materialize(const ArrayGeometry& geom, const ArrayColumn& column);

/// b^H a in O(M).
Complex inner_product(const ArrayGeometry& geom, const ArrayColumn& a, const ArrayColumn& b);

/// Matrix of left[i]^H right[j].
ComplexMatrix cross_gram(const ArrayGeometry& geom, std::span<const ArrayColumn> left,
                         std::span<const ArrayColumn> right);

/// Hermitian Gram matrix of the columns.
ComplexMatrix gram(const ArrayGeometry& geom, std::span<const ArrayColumn> columns);

}  // namespace aerobeam

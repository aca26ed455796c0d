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

#include <memory>
#include <string_view>
#include <vector>

#include "aerobeam/array.hpp"

namespace aerobeam {

enum class Design { nsb, nsb_d, mpdrb };

std::string_view to_string(Design design);
std::optional<Design> parse_design(std::string_view text);

/// Steering vectors of every user sharing a time-frequency block. Index 0 is
/// the served user. With derivatives enabled the column list is
///   [e_0 .. e_N, de_0/daz, de_0/dze, .., de_N/daz, de_N/dze].
/// Immutable; copies share the same storage.
class SteeringBank {
 public:
  SteeringBank(ArrayGeometry geometry, const std::vector<DirectionAngles>& users,
               bool with_derivatives);
  SteeringBank(ArrayGeometry geometry, const std::vector<DirectionCosines>& users);

  const ArrayGeometry& geometry() const noexcept { return data_->geometry; }
  std::size_t user_count() const noexcept { return data_->user_count; }
  bool has_derivatives() const noexcept { return data_->with_derivatives; }

  std::span<const ArrayColumn> columns() const noexcept { return data_->columns; }
  const ArrayColumn& steering(std::size_t user) const { return data_->columns.at(user); }
  const ArrayColumn& azimuth_derivative(std::size_t user) const;
  const ArrayColumn& zenith_derivative(std::size_t user) const;

  /// Gram matrix over all columns.
  const ComplexMatrix& gram() const noexcept { return data_->gram; }

  /// Explicit M^2 x columns matrix; only sensible for small arrays.
  ComplexMatrix materialize() const;

 private:
  struct Data {
    ArrayGeometry geometry;
    std::size_t user_count;
    bool with_derivatives;
    std::vector<ArrayColumn> columns;
    ComplexMatrix gram;
  };
  std::shared_ptr<const Data> data_;
};

/// A precoder expressed as a combination of the bank's columns. Every design
/// lies in the span of the bank, so responses towards any ArrayColumn can be
/// evaluated without forming the M^2-long vector.
class BeamformerWeights {
 public:
  BeamformerWeights(SteeringBank bank, Design design, std::size_t target,
                    ComplexVector coefficients, Eigen::Index effective_rank);

  Design design() const noexcept { return design_; }
  std::size_t target_index() const noexcept { return target_; }
  const SteeringBank& bank() const noexcept { return bank_; }
  const ComplexVector& coefficients() const noexcept { return coefficients_; }
  Eigen::Index effective_rank() const noexcept { return effective_rank_; }

  /// probe^H w
  Complex project(const ArrayColumn& probe) const;
  ComplexVector materialize() const;

 private:
  SteeringBank bank_;
  Design design_;
  std::size_t target_;
  ComplexVector coefficients_;
  Eigen::Index effective_rank_;
};

/// Precoders for every user of a bank, column u of `coefficients` being the
/// weights that serve user u.
class BeamformerSet {
 public:
  BeamformerSet(SteeringBank bank, Design design, ComplexMatrix coefficients,
                Eigen::Index effective_rank);

  std::size_t size() const noexcept { return static_cast<std::size_t>(coefficients_.cols()); }
  Design design() const noexcept { return design_; }
  const SteeringBank& bank() const noexcept { return bank_; }
  const ComplexMatrix& coefficients() const noexcept { return coefficients_; }
  Eigen::Index effective_rank() const noexcept { return effective_rank_; }

  BeamformerWeights weights(std::size_t user) const;
  /// probe^H w_u for every user u.
  ComplexVector project(const ArrayColumn& probe) const;

 private:
  SteeringBank bank_;
  Design design_;
  ComplexMatrix coefficients_;
  Eigen::Index effective_rank_;
};

/// Relative eigenvalue floor of the equilibrated Gram matrix below which a
/// direction is treated as linearly dependent.
inline constexpr double kRankTolerance = 1e-10;
/// Squared residual (relative to the target's own norm) below which the
/// target is considered to lie inside the span of the constraints.
inline constexpr double kDegeneracyTolerance = 1e-12;

/// All N+1 precoders of one design from a single factorisation of the bank's
/// Gram matrix.
BeamformerSet design_beamformers(const SteeringBank& bank, Design design);

BeamformerWeights nsb(const SteeringBank& bank, std::size_t target);
BeamformerWeights nsb_d(const SteeringBank& bank, std::size_t target);
BeamformerWeights mpdrb(const SteeringBank& bank, std::size_t target);

/// |w^H e(angles)|^2
double array_pattern(const BeamformerWeights& w, const DirectionAngles& angles);
double array_pattern(const BeamformerWeights& w, const ArrayColumn& probe);

/// Explicit-vector constructions used for cross-checks and small arrays.
namespace dense {

/// target - C (C^H C)^+ C^H target via a complete orthogonal decomposition.
ComplexVector null_steer(const ComplexVector& target, const ComplexMatrix& constraints);

/// Minimum-power distortionless response from the thin SVD of `users`,
/// keeping singular values above 1e-10 of the largest.
ComplexVector mpdr_svd(const ComplexMatrix& users, Eigen::Index target);

}  // namespace dense

}  // namespace aerobeam

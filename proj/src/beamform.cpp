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

#include "aerobeam/beamform.hpp"

#include <algorithm>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace aerobeam {

std::string_view to_string(Design design) {
  switch (design) {
    case Design::nsb: return "nsb";
    case Design::nsb_d: return "nsb_d";
    case Design::mpdrb: return "mpdrb";
  }
  return "unknown";
}

std::optional<Design> parse_design(std::string_view text) {
  if (text == "nsb" || text == "NSB") return Design::nsb;
  if (text == "nsb_d" || text == "nsb-d" || text == "NSB-D" || text == "nsbd") return Design::nsb_d;
  if (text == "mpdrb" || text == "MPDRB" || text == "mpdr") return Design::mpdrb;
  return std::nullopt;
}

// --- SteeringBank ---------------------------------------------------------

SteeringBank::SteeringBank(ArrayGeometry geometry, const std::vector<DirectionAngles>& users,
                           bool with_derivatives) {
  if (users.empty()) throw std::invalid_argument("SteeringBank needs at least one user");
  std::vector<ArrayColumn> columns;
  columns.reserve(users.size() * (with_derivatives ? 3 : 1));
  for (const auto& a : users) columns.push_back(steering_column(a));
  if (with_derivatives) {
    for (const auto& a : users) {
      columns.push_back(azimuth_derivative_column(a));
      columns.push_back(zenith_derivative_column(a));
    }
  }
  ComplexMatrix g = aerobeam::gram(geometry, columns);
  data_ = std::make_shared<const Data>(
      Data{geometry, users.size(), with_derivatives, std::move(columns), std::move(g)});
}

SteeringBank::SteeringBank(ArrayGeometry geometry, const std::vector<DirectionCosines>& users) {
  if (users.empty()) throw std::invalid_argument("SteeringBank needs at least one user");
  std::vector<ArrayColumn> columns;
  columns.reserve(users.size());
  for (const auto& c : users) columns.push_back(steering_column(c));
  ComplexMatrix g = aerobeam::gram(geometry, columns);
  data_ = std::make_shared<const Data>(
      Data{geometry, users.size(), false, std::move(columns), std::move(g)});
}

const ArrayColumn& SteeringBank::azimuth_derivative(std::size_t user) const {
  if (!has_derivatives()) throw std::logic_error("bank was built without derivatives");
  return data_->columns.at(user_count() + 2 * user);
}

const ArrayColumn& SteeringBank::zenith_derivative(std::size_t user) const {
  if (!has_derivatives()) throw std::logic_error("bank was built without derivatives");
  return data_->columns.at(user_count() + 2 * user + 1);
}

ComplexMatrix SteeringBank::materialize() const {
  const auto& cols = data_->columns;
  ComplexMatrix out(static_cast<Eigen::Index>(geometry().element_count()),
                    static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = aerobeam::materialize(geometry(), cols[k]);
  }
  return out;
}

// --- weights --------------------------------------------------------------

BeamformerWeights::BeamformerWeights(SteeringBank bank, Design design, std::size_t target,
                                     ComplexVector coefficients, Eigen::Index effective_rank)
    : bank_(std::move(bank)),
      design_(design),
      target_(target),
      coefficients_(std::move(coefficients)),
      effective_rank_(effective_rank) {}

Complex BeamformerWeights::project(const ArrayColumn& probe) const {
  const ArrayColumn probes[] = {probe};
  const ComplexMatrix row = cross_gram(bank_.geometry(), probes, bank_.columns());
  return (row * coefficients_)(0);
}

ComplexVector BeamformerWeights::materialize() const { return bank_.materialize() * coefficients_; }

BeamformerSet::BeamformerSet(SteeringBank bank, Design design, ComplexMatrix coefficients,
                             Eigen::Index effective_rank)
    : bank_(std::move(bank)),
      design_(design),
      coefficients_(std::move(coefficients)),
      effective_rank_(effective_rank) {}

BeamformerWeights BeamformerSet::weights(std::size_t user) const {
  return BeamformerWeights(bank_, design_, user,
                           coefficients_.col(static_cast<Eigen::Index>(user)), effective_rank_);
}

ComplexVector BeamformerSet::project(const ArrayColumn& probe) const {
  const ArrayColumn probes[] = {probe};
  const ComplexMatrix row = cross_gram(bank_.geometry(), probes, bank_.columns());
  return (row * coefficients_).transpose();
}

// --- designs --------------------------------------------------------------

namespace {

struct Solution {
  ComplexMatrix coefficients;
  Eigen::Index rank;
};

std::vector<Eigen::Index> constraint_columns(const SteeringBank& bank, Design design) {
  const auto users = static_cast<Eigen::Index>(bank.user_count());
  const ComplexMatrix& g = bank.gram();
  std::vector<Eigen::Index> active;
  const Eigen::Index last = (design == Design::nsb_d) ? g.rows() : users;
  const double largest = g.diagonal().real().head(last).maxCoeff();
  for (Eigen::Index k = 0; k < last; ++k) {
    // A derivative column vanishes at nadir; its constraint is vacuous.
    if (g(k, k).real() > 1e-24 * largest) active.push_back(k);
  }
  return active;
}

[[noreturn]] void throw_degenerate(std::size_t user) {
  throw DegenerateDirections("direction of user " + std::to_string(user) +
                             " lies in the span of the other constraint directions");
}

// w_u = b_u - B_o (B_o^H B_o)^+ B_o^H b_u for every target u, with B_o every
// active column except b_u.
Solution null_steering(const SteeringBank& bank, Design design) {
  const auto users = static_cast<Eigen::Index>(bank.user_count());
  const ComplexMatrix& g = bank.gram();
  const std::vector<Eigen::Index> active = constraint_columns(bank, design);
  const auto na = static_cast<Eigen::Index>(active.size());

  Eigen::VectorXd scale(na);
  for (Eigen::Index a = 0; a < na; ++a) scale(a) = 1.0 / std::sqrt(g(active[a], active[a]).real());
  ComplexMatrix gs(na, na);
  for (Eigen::Index b = 0; b < na; ++b)
    for (Eigen::Index a = 0; a < na; ++a) gs(a, b) = scale(a) * scale(b) * g(active[a], active[b]);

  // Steering columns come first and are always active, so user u sits at
  // position u of `active`.
  Solution out{ComplexMatrix::Zero(g.rows(), users), na};

  Eigen::LDLT<ComplexMatrix> ldlt(gs);
  const Eigen::VectorXd pivots = ldlt.vectorD().real();
  // rcond() alone misses exactly-zero pivots.
  if (ldlt.info() == Eigen::Success && pivots.minCoeff() > kRankTolerance * pivots.maxCoeff() &&
      ldlt.rcond() > kRankTolerance) {
    // Only the columns belonging to steering directions are needed.
    const ComplexMatrix inv = ldlt.solve(ComplexMatrix::Identity(na, users));
    for (Eigen::Index u = 0; u < users; ++u) {
      const double pivot = inv(u, u).real();
      if (!(1.0 / pivot > kDegeneracyTolerance)) throw_degenerate(static_cast<std::size_t>(u));
      for (Eigen::Index a = 0; a < na; ++a) {
        out.coefficients(active[a], u) = scale(a) * inv(a, u) / (pivot * scale(u));
      }
      out.coefficients(u, u) = 1.0;
    }
    return out;
  }

  // Rank-deficient bank: solve every leave-one-out system separately with an
  // eigenvalue-truncated pseudo-inverse.
  for (Eigen::Index u = 0; u < users; ++u) {
    std::vector<Eigen::Index> others;
    others.reserve(static_cast<std::size_t>(na - 1));
    for (Eigen::Index a = 0; a < na; ++a)
      if (a != u) others.push_back(a);
    const auto no = static_cast<Eigen::Index>(others.size());
    if (no == 0) {
      out.coefficients(u, u) = 1.0;
      out.rank = std::min<Eigen::Index>(out.rank, 1);
      continue;
    }
    ComplexMatrix go(no, no);
    ComplexVector rhs(no);
    for (Eigen::Index q = 0; q < no; ++q) {
      rhs(q) = gs(others[q], u);
      for (Eigen::Index p = 0; p < no; ++p) go(p, q) = gs(others[p], others[q]);
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(go);
    const Eigen::VectorXd& lambda = es.eigenvalues();
    const double floor = kRankTolerance * lambda.maxCoeff();
    ComplexVector x = ComplexVector::Zero(no);
    Eigen::Index kept = 0;
    for (Eigen::Index k = 0; k < no; ++k) {
      if (lambda(k) <= floor) continue;
      const auto v = es.eigenvectors().col(k);
      x += v * (v.dot(rhs) / lambda(k));
      ++kept;
    }
    const double residual = 1.0 - rhs.dot(x).real();
    if (!(residual > kDegeneracyTolerance)) throw_degenerate(static_cast<std::size_t>(u));
    for (Eigen::Index q = 0; q < no; ++q) {
      out.coefficients(active[others[q]], u) = -scale(others[q]) * x(q) / scale(u);
    }
    out.coefficients(u, u) = 1.0;
    out.rank = std::min(out.rank, kept + 1);
  }
  return out;
}

// Thin SVD of the steering matrix obtained from its Gram matrix:
// E = U D V^H with E^H E = V D^2 V^H and U = E V D^{-1}.
Solution minimum_power(const SteeringBank& bank) {
  const auto users = static_cast<Eigen::Index>(bank.user_count());
  const ComplexMatrix g = bank.gram().topLeftCorner(users, users);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const ComplexMatrix& v = es.eigenvectors();
  const double floor = kRankTolerance * lambda.maxCoeff();

  std::vector<Eigen::Index> kept;
  for (Eigen::Index k = 0; k < users; ++k)
    if (lambda(k) > floor) kept.push_back(k);

  Solution out{ComplexMatrix::Zero(bank.gram().rows(), users),
               static_cast<Eigen::Index>(kept.size())};
  for (Eigen::Index u = 0; u < users; ++u) {
    // e_hat = U^H e_u = D^{-1} V^H E^H e_u
    const ComplexVector projected = v.adjoint() * g.col(u);
    ComplexVector numerator = ComplexVector::Zero(users);
    double denominator = 0.0;
    for (Eigen::Index k : kept) {
      const double sigma = std::sqrt(lambda(k));
      const Complex e_hat = projected(k) / sigma;
      // U D^{-2} e_hat = E V D^{-3} e_hat
      numerator += v.col(k) * (e_hat / (sigma * sigma * sigma));
      denominator += std::norm(e_hat) / (sigma * sigma);
    }
    if (!(denominator > kDegeneracyTolerance)) throw_degenerate(static_cast<std::size_t>(u));
    out.coefficients.col(u).head(users) = numerator / denominator;
  }
  return out;
}

}  // namespace

BeamformerSet design_beamformers(const SteeringBank& bank, Design design) {
  if (design == Design::nsb_d && !bank.has_derivatives()) {
    throw std::invalid_argument("NSB-D needs a bank built with derivative columns");
  }
  Solution s = (design == Design::mpdrb) ? minimum_power(bank) : null_steering(bank, design);
  return BeamformerSet(bank, design, std::move(s.coefficients), s.rank);
}

BeamformerWeights nsb(const SteeringBank& bank, std::size_t target) {
  if (target >= bank.user_count()) throw std::out_of_range("nsb: target index out of range");
  return design_beamformers(bank, Design::nsb).weights(target);
}

BeamformerWeights nsb_d(const SteeringBank& bank, std::size_t target) {
  if (target >= bank.user_count()) throw std::out_of_range("nsb_d: target index out of range");
  return design_beamformers(bank, Design::nsb_d).weights(target);
}

BeamformerWeights mpdrb(const SteeringBank& bank, std::size_t target) {
  if (target >= bank.user_count()) throw std::out_of_range("mpdrb: target index out of range");
  return design_beamformers(bank, Design::mpdrb).weights(target);
}

double array_pattern(const BeamformerWeights& w, const ArrayColumn& probe) {
  return std::norm(w.project(probe));
}

double array_pattern(const BeamformerWeights& w, const DirectionAngles& angles) {
  return array_pattern(w, steering_column(angles));
}

namespace dense {

ComplexVector null_steer(const ComplexVector& target, const ComplexMatrix& constraints) {
  if (constraints.cols() == 0) return target;
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(constraints);
  const ComplexVector x = cod.solve(target);
  return target - constraints * x;
}

ComplexVector mpdr_svd(const ComplexMatrix& users, Eigen::Index target) {
  Eigen::BDCSVD<ComplexMatrix> svd(users, Eigen::ComputeThinU);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double floor = 1e-10 * sigma(0);
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) >= floor) ++rank;
  const ComplexMatrix u = svd.matrixU().leftCols(rank);
  const ComplexVector e_hat = u.adjoint() * users.col(target);
  const Eigen::VectorXd inv_sq = sigma.head(rank).array().square().inverse();
  const ComplexVector weighted = inv_sq.asDiagonal() * e_hat;
  const Complex denominator = e_hat.dot(weighted);
  if (!(std::abs(denominator) > kDegeneracyTolerance)) {
    throw DegenerateDirections("mpdr_svd: target not represented by retained singular vectors");
  }
  return (u * weighted) / denominator;
}

}  // namespace dense

}  // namespace aerobeam

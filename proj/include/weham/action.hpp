// Copyright 2026 The weham Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "weham/lie_algebra.hpp"
#include "weham/poisson.hpp"
#include "weham/polynomial.hpp"

namespace weham {

/// A Lie algebra acting on (R^N, pi) through chosen Hamiltonians
/// H_{e_0}, ..., H_{e_{n-1}}; H_u extends linearly.
class WeaklyHamiltonianAction {
 public:
  WeaklyHamiltonianAction(LieAlgebra algebra, PoissonStructure poisson, std::vector<Polynomial> hamiltonians);

  const LieAlgebra& algebra() const { return algebra_; }
  const PoissonStructure& poisson() const { return poisson_; }
  const std::vector<Polynomial>& hamiltonians() const { return hamiltonians_; }
  std::size_t dim() const { return algebra_.dim(); }
  std::size_t nvars() const { return poisson_.nvars(); }

  Polynomial hamiltonian(const Vec& u) const;

 private:
  LieAlgebra algebra_;
  PoissonStructure poisson_;
  std::vector<Polynomial> hamiltonians_;
};

/// Antisymmetric n x n matrix of polynomials c_ij = c(e_i, e_j).
class CocycleMatrix {
 public:
  CocycleMatrix(std::size_t dim, std::size_t nvars);

  std::size_t dim() const { return dim_; }
  std::size_t nvars() const { return nvars_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  /// Sets c_ij and c_ji = -value.
  void set(std::size_t i, std::size_t j, const Polynomial& value);

  /// c(u, v) = sum_ij u_i v_j c_ij.
  Polynomial pair(const Vec& u, const Vec& v) const;
  Eigen::MatrixXd at(const Eigen::VectorXd& x) const;

  bool is_zero(double tol = kCoefficientEpsilon) const;
  bool is_constant(double tol = kCoefficientEpsilon) const;

 private:
  std::size_t dim_;
  std::size_t nvars_;
  std::vector<Polynomial> entries_;
};

struct ActionReport {
  bool ok = true;
  /// First basis pair (i < j) whose {H_i,H_j} - H_[e_i,e_j] is not a Casimir.
  std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
};

/// Checks that every {H_i, H_j} - H_[e_i,e_j] is a Casimir, which is exactly
/// the condition for the fundamental fields to close as the algebra says.
ActionReport validate_action(const WeaklyHamiltonianAction& action, double tol = kCoefficientEpsilon);

/// c(u, v) = {H_u, H_v} - H_[u,v]. Throws ValidationError if the action does
/// not validate.
CocycleMatrix cocycle(const WeaklyHamiltonianAction& action, double tol = kCoefficientEpsilon);

/// Same formula without the Casimir check.
CocycleMatrix raw_cocycle(const WeaklyHamiltonianAction& action);

struct CeReport {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> offending_triple;
};

/// Closedness in the Chevalley-Eilenberg complex with trivial coefficients:
/// (dc)(u,v,w) = -c([u,v],w) - c([v,w],u) - c([w,u],v) vanishes on basis triples.
CeReport ce_check(const WeaklyHamiltonianAction& action, const CocycleMatrix& c, double tol = kCoefficientEpsilon);

/// A cochain b: g -> Cas(M), stored as b(e_i).
using Cochain = std::vector<Polynomial>;

/// (delta b)(u, v) = -b([u, v]).
CocycleMatrix coboundary(const LieAlgebra& algebra, const Cochain& b);

struct ExactnessResult {
  /// Witness with c = delta b, i.e. c(u,v) = -b([u,v]). Empty when not exact.
  std::optional<Cochain> witness;
  /// Cocycle of the action shifted by -b is identically zero.
  bool verified = false;
  double residual = 0.0;

  bool exact() const { return witness.has_value(); }
};

/// Looks for Casimir-valued b of polynomial degree <= max_degree with c = delta b
/// by solving the linear system on monomial coefficients (minimum-norm
/// solution). Throws ValidationError if c is not closed.
ExactnessResult exactness(const WeaklyHamiltonianAction& action, const CocycleMatrix& c, int max_degree = 2,
                          double tol = 1e-9);

/// Basis (columns) of ker c(x) in g.
Eigen::MatrixXd kernel_at(const CocycleMatrix& c, const Eigen::VectorXd& x, double rank_tol = 1e-9);

/// H'_i = H_i + b(e_i). Each b(e_i) must be a Casimir. The new cocycle is
/// c + delta b, i.e. c'(u,v) = c(u,v) - b([u,v]).
WeaklyHamiltonianAction hamiltonian_shift(const WeaklyHamiltonianAction& action, const Cochain& b,
                                          double tol = kCoefficientEpsilon);

}  // namespace weham

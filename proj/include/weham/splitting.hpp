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

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "weham/action.hpp"
#include "weham/flow.hpp"

namespace weham {

/// A constant subspace V of an abelian algebra with a framing v_1..v_{2d}
/// (the columns of `subspace`). Cocycle entries are Casimirs, so V is
/// constant along symplectic leaves.
class SplitConfig {
 public:
  SplitConfig(WeaklyHamiltonianAction action, Eigen::MatrixXd subspace, Eigen::MatrixXd inner_product = {},
              double step = kDefaultFlowStep, double rank_tol = 1e-9);

  const WeaklyHamiltonianAction& action() const { return action_; }
  const CocycleMatrix& cocycle() const { return cocycle_; }
  const Eigen::MatrixXd& subspace() const { return subspace_; }
  const Eigen::MatrixXd& inner_product() const { return inner_product_; }
  /// H_{v_a}, one per framing vector.
  const std::vector<Polynomial>& framing_hamiltonians() const { return framing_hamiltonians_; }
  std::size_t rank() const { return static_cast<std::size_t>(subspace_.cols()); }
  double step() const { return step_; }
  double rank_tolerance() const { return rank_tol_; }

 private:
  WeaklyHamiltonianAction action_;
  CocycleMatrix cocycle_;
  Eigen::MatrixXd subspace_;
  Eigen::MatrixXd inner_product_;
  std::vector<Polynomial> framing_hamiltonians_;
  double step_;
  double rank_tol_;
};

struct CocycleRestriction {
  Eigen::MatrixXd matrix;  // C_ab = c(v_a, v_b)(x)
  double det = 1.0;
  double scale = 0.0;      // max |C_ab|
  /// |det| > 1e-9 * scale^{2d}
  bool nondegenerate = true;
};

CocycleRestriction restrict_cocycle(const SplitConfig& config, const Eigen::VectorXd& x);

struct Translation {
  Eigen::VectorXd coords;  // in the framing of V
  Eigen::VectorXd vector;  // in g
};

/// Unique v in V with H_{v_a}(y) + c(v_a, v)(y) = 0 for all a. Because the
/// action is abelian, zeta is affine in s and the landing condition
/// H_{v_a}(phi^1_v(y)) = 0 is this linear system.
Translation solve_translation(const SplitConfig& config, const Eigen::VectorXd& y);

struct SplitPoint {
  Translation translation;
  Eigen::VectorXd n_point;
  double landing_residual = 0.0;  // max_a |H_{v_a}(n_point)|
};

inline constexpr double kLandingTolerance = 1e-6;

/// y ↦ (v, phi^1_v(y)).
SplitPoint split_point(const SplitConfig& config, const Eigen::VectorXd& y,
                       double landing_tol = kLandingTolerance);

/// (v, x) ↦ phi^1_{-v}(x).
Eigen::VectorXd split_inverse(const SplitConfig& config, const Eigen::VectorXd& coords, const Eigen::VectorXd& x);

/// (H_{v_1}(x), ..., H_{v_2d}(x)); N is its zero set.
Eigen::VectorXd psi(const SplitConfig& config, const Eigen::VectorXd& x);

/// Jacobian of psi at x (2d x N).
Eigen::MatrixXd psi_jacobian(const SplitConfig& config, const Eigen::VectorXd& x);

struct DiracCheck {
  bool ok = false;
  std::size_t tangent_dim = 0;       // dim T_xN
  std::size_t hamiltonian_dim = 0;   // dim pi#(T_xN^0)
  std::size_t intersection_dim = 0;
};

/// T_xN ∩ pi#(T_xN^0) = {0}, with T_xN = ker dpsi(x) and pi#(T_xN^0) spanned
/// by the framing fields X_{v_a}(x).
DiracCheck check_poisson_dirac(const SplitConfig& config, const Eigen::VectorXd& x);

/// Bivector inverse of a nondegenerate 2-form with matrix C under the
/// library's conventions (iota_{X_H} omega = dH, X_H(g) = {g, H}): -C^{-1}.
Eigen::MatrixXd inverse_bivector(const Eigen::MatrixXd& form);

struct ProductCheck {
  /// max |{t_a, t_b} - (omega^{-1})_ab| over samples, omega = C(y).
  double translation_bracket_max = 0.0;
  /// max |{t_a, x_k ∘ pr_N}| over samples.
  double cross_bracket_max = 0.0;
  double max_discrepancy = 0.0;
  /// C(y) agreed (to 1e-9) at all samples.
  bool constant_form = true;
  std::size_t samples = 0;
};

/// Finite-difference check that Phi carries pi to omega^{-1} ⊕ pi_N: the
/// translation coordinates y ↦ t(y) bracket to the inverse of C, and have
/// zero bracket with every coordinate of y ↦ n_point(y).
ProductCheck verify_product(const SplitConfig& config, const std::vector<Eigen::VectorXd>& points,
                            double fd_step = 1e-4);

struct ResidualAction {
  Eigen::MatrixXd kernel;      // K = ker c, columns
  Eigen::MatrixXd complement;  // V = K^perp, columns
  /// N is the common zero set of these (H_v for the columns of V).
  std::vector<Polynomial> slice_equations;
  /// H_k for the columns of K; restricted to N they generate the residual action.
  std::vector<Polynomial> hamiltonians;
  CocycleMatrix residual_cocycle{0, 0};
  bool hamiltonian = false;
};

/// Splits g = K ⊕ K^perp for a constant cocycle. Throws ValidationError when
/// c is not constant (unsupported) or when K^perp is nonzero on a
/// non-abelian algebra.
ResidualAction residual_action(const WeaklyHamiltonianAction& action, const CocycleMatrix& c,
                               const Eigen::MatrixXd& inner_product = {}, double rank_tol = 1e-9);

}  // namespace weham

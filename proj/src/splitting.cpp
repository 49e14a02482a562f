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

#include "weham/splitting.hpp"

#include <cmath>
#include <string>

#include "weham/errors.hpp"
#include "weham/linalg.hpp"

namespace weham {

namespace {

Eigen::MatrixXd checked_inner_product(const Eigen::MatrixXd& g, std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(n);
  if (g.size() == 0) return Eigen::MatrixXd::Identity(dim, dim);
  if (g.rows() != dim || g.cols() != dim) throw InputError("inner product must be an n x n matrix");
  if (!g.isApprox(g.transpose(), 1e-12)) throw InputError("inner product must be symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) throw InputError("inner product must be positive definite");
  return g;
}

Eigen::VectorXd gradient(const Polynomial& f, const Eigen::VectorXd& x) {
  Eigen::VectorXd g(static_cast<Eigen::Index>(f.nvars()));
  for (std::size_t i = 0; i < f.nvars(); ++i) g(static_cast<Eigen::Index>(i)) = f.derivative(i).evaluate(x);
  return g;
}

}  // namespace

SplitConfig::SplitConfig(WeaklyHamiltonianAction action, Eigen::MatrixXd subspace, Eigen::MatrixXd inner_product,
                         double step, double rank_tol)
    : action_(std::move(action)),
      cocycle_(weham::cocycle(action_)),
      subspace_(std::move(subspace)),
      inner_product_(checked_inner_product(inner_product, action_.dim())),
      step_(step),
      rank_tol_(rank_tol) {
  if (!action_.algebra().is_abelian()) {
    throw ValidationError("splitting requires an abelian Lie algebra");
  }
  if (subspace_.rows() != static_cast<Eigen::Index>(action_.dim())) {
    throw InputError("subspace vectors must have length " + std::to_string(action_.dim()));
  }
  if (subspace_.cols() % 2 != 0) throw InputError("subspace dimension must be even");
  if (linalg::rank(subspace_, rank_tol_) != static_cast<std::size_t>(subspace_.cols())) {
    throw InputError("subspace framing vectors are linearly dependent");
  }
  if (!(step_ > 0.0)) throw InputError("flow step must be positive");
  for (Eigen::Index a = 0; a < subspace_.cols(); ++a) {
    framing_hamiltonians_.push_back(action_.hamiltonian(subspace_.col(a)));
  }
}

CocycleRestriction restrict_cocycle(const SplitConfig& config, const Eigen::VectorXd& x) {
  CocycleRestriction r;
  const Eigen::MatrixXd& v = config.subspace();
  r.matrix = v.transpose() * config.cocycle().at(x) * v;
  if (r.matrix.size() == 0) return r;
  r.scale = r.matrix.cwiseAbs().maxCoeff();
  r.det = r.matrix.determinant();
  r.nondegenerate = r.scale > 0.0 && std::abs(r.det) > 1e-9 * std::pow(r.scale, static_cast<double>(r.matrix.rows()));
  return r;
}

Translation solve_translation(const SplitConfig& config, const Eigen::VectorXd& y) {
  const auto r = restrict_cocycle(config, y);
  if (!r.nondegenerate) {
    throw NumericalError("cocycle restricted to the subspace is degenerate at this point (det = " +
                         std::to_string(r.det) + ")");
  }
  Translation t;
  if (r.matrix.size() == 0) {
    t.coords = Eigen::VectorXd(0);
  } else {
    t.coords = r.matrix.fullPivLu().solve(-psi(config, y));
  }
  t.vector = config.subspace() * t.coords;
  return t;
}

SplitPoint split_point(const SplitConfig& config, const Eigen::VectorXd& y, double landing_tol) {
  SplitPoint sp;
  sp.translation = solve_translation(config, y);
  const Polynomial hv = config.action().hamiltonian(sp.translation.vector);
  sp.n_point = flow_endpoint(config.action().poisson(), hv, y, 1.0, config.step());
  const Eigen::VectorXd res = psi(config, sp.n_point);
  sp.landing_residual = res.size() ? res.cwiseAbs().maxCoeff() : 0.0;
  if (sp.landing_residual > landing_tol) {
    throw NumericalError("split point missed N: landing residual " + std::to_string(sp.landing_residual));
  }
  return sp;
}

Eigen::VectorXd split_inverse(const SplitConfig& config, const Eigen::VectorXd& coords, const Eigen::VectorXd& x) {
  if (coords.size() != config.subspace().cols()) throw InputError("translation has wrong number of coordinates");
  const Polynomial h = config.action().hamiltonian(-(config.subspace() * coords));
  return flow_endpoint(config.action().poisson(), h, x, 1.0, config.step());
}

Eigen::VectorXd psi(const SplitConfig& config, const Eigen::VectorXd& x) {
  const auto& hs = config.framing_hamiltonians();
  Eigen::VectorXd out(static_cast<Eigen::Index>(hs.size()));
  for (std::size_t a = 0; a < hs.size(); ++a) out(static_cast<Eigen::Index>(a)) = hs[a].evaluate(x);
  return out;
}

Eigen::MatrixXd psi_jacobian(const SplitConfig& config, const Eigen::VectorXd& x) {
  const auto& hs = config.framing_hamiltonians();
  Eigen::MatrixXd jac(static_cast<Eigen::Index>(hs.size()), static_cast<Eigen::Index>(config.action().nvars()));
  for (std::size_t a = 0; a < hs.size(); ++a) jac.row(static_cast<Eigen::Index>(a)) = gradient(hs[a], x).transpose();
  return jac;
}

DiracCheck check_poisson_dirac(const SplitConfig& config, const Eigen::VectorXd& x) {
  DiracCheck check;
  const Eigen::MatrixXd jac = psi_jacobian(config, x);
  const Eigen::MatrixXd tangent = linalg::nullspace(jac, config.rank_tolerance());
  // pi#(dH_{v_a}) = X_{v_a}(x)
  const Eigen::MatrixXd fields = config.action().poisson().matrix_at(x) * jac.transpose();
  check.tangent_dim = static_cast<std::size_t>(tangent.cols());
  check.hamiltonian_dim = linalg::rank(fields, config.rank_tolerance());
  check.intersection_dim = linalg::intersection_dimension(tangent, fields, config.rank_tolerance());
  check.ok = check.intersection_dim == 0;
  return check;
}

Eigen::MatrixXd inverse_bivector(const Eigen::MatrixXd& form) {
  if (form.size() == 0) return form;
  return -form.inverse();
}

ProductCheck verify_product(const SplitConfig& config, const std::vector<Eigen::VectorXd>& points, double fd_step) {
  if (!(fd_step > 0.0)) throw InputError("finite-difference step must be positive");
  ProductCheck check;
  const auto n = static_cast<Eigen::Index>(config.action().nvars());
  const auto r = static_cast<Eigen::Index>(config.rank());
  Eigen::MatrixXd first_form;
  for (const auto& y : points) {
    const auto restriction = restrict_cocycle(config, y);
    if (!restriction.nondegenerate) throw NumericalError("verify_product: degenerate cocycle at a sample point");
    if (check.samples == 0) {
      first_form = restriction.matrix;
    } else if ((restriction.matrix - first_form).cwiseAbs().maxCoeff() > 1e-9) {
      check.constant_form = false;
    }

    Eigen::MatrixXd jt(r, n), jn(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::VectorXd yp = y, ym = y;
      yp(i) += fd_step;
      ym(i) -= fd_step;
      const SplitPoint sp = split_point(config, yp);
      const SplitPoint sm = split_point(config, ym);
      jt.col(i) = (sp.translation.coords - sm.translation.coords) / (2.0 * fd_step);
      jn.col(i) = (sp.n_point - sm.n_point) / (2.0 * fd_step);
    }
    const Eigen::MatrixXd pi = config.action().poisson().matrix_at(y);
    const Eigen::MatrixXd tt = jt * pi * jt.transpose();
    const Eigen::MatrixXd tn = jt * pi * jn.transpose();
    if (r > 0) {
      check.translation_bracket_max = std::max(
          check.translation_bracket_max, (tt - inverse_bivector(restriction.matrix)).cwiseAbs().maxCoeff());
      check.cross_bracket_max = std::max(check.cross_bracket_max, tn.cwiseAbs().maxCoeff());
    }
    ++check.samples;
  }
  check.max_discrepancy = std::max(check.translation_bracket_max, check.cross_bracket_max);
  return check;
}

ResidualAction residual_action(const WeaklyHamiltonianAction& action, const CocycleMatrix& c,
                               const Eigen::MatrixXd& inner_product, double rank_tol) {
  if (!c.is_constant()) {
    throw ValidationError("unsupported: residual action needs a constant cocycle (framing of ker c by constants)");
  }
  const std::size_t n = action.dim();
  const Eigen::MatrixXd g = checked_inner_product(inner_product, n);
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(action.nvars()));

  ResidualAction res;
  res.kernel = linalg::nullspace(c.at(origin), rank_tol);
  if (res.kernel.cols() == 0) {
    res.complement = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  } else {
    res.complement = linalg::nullspace(res.kernel.transpose() * g, rank_tol);
  }
  if (res.complement.cols() > 0 && !action.algebra().is_abelian()) {
    throw ValidationError("splitting off a translational factor requires an abelian Lie algebra");
  }
  for (Eigen::Index a = 0; a < res.complement.cols(); ++a) res.slice_equations.push_back(action.hamiltonian(res.complement.col(a)));
  for (Eigen::Index b = 0; b < res.kernel.cols(); ++b) res.hamiltonians.push_back(action.hamiltonian(res.kernel.col(b)));

  const auto k = static_cast<std::size_t>(res.kernel.cols());
  res.residual_cocycle = CocycleMatrix(k, action.nvars());
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      res.residual_cocycle.set(a, b, c.pair(res.kernel.col(static_cast<Eigen::Index>(a)),
                                            res.kernel.col(static_cast<Eigen::Index>(b))));
    }
  }
  res.hamiltonian = res.residual_cocycle.is_zero();
  return res;
}

}  // namespace weham

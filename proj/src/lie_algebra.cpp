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

#include "weham/lie_algebra.hpp"

#include <cmath>

#include "weham/errors.hpp"
#include "weham/linalg.hpp"

namespace weham {

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<BasisBracket>& brackets,
                       std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
  if (dim_ == 0) throw InputError("Lie algebra dimension must be positive");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i + 1));
  } else if (labels_.size() != dim_) {
    throw InputError("Lie algebra has " + std::to_string(labels_.size()) + " labels for dimension " +
                     std::to_string(dim_));
  }
  const auto n = static_cast<Eigen::Index>(dim_);
  table_.assign(dim_ * dim_, Vec::Zero(n));
  std::vector<bool> seen(dim_ * dim_, false);
  for (std::size_t r = 0; r < brackets.size(); ++r) {
    const auto& b = brackets[r];
    const std::string where = "bracket record " + std::to_string(r);
    if (b.i >= b.j) throw InputError(where + ": requires i < j");
    if (b.j >= dim_) throw InputError(where + ": index out of range");
    if (b.coords.size() != n) throw InputError(where + ": coords must have length " + std::to_string(dim_));
    if (seen[b.i * dim_ + b.j]) throw InputError(where + ": duplicate pair");
    seen[b.i * dim_ + b.j] = true;
    table_[b.i * dim_ + b.j] = b.coords;
    table_[b.j * dim_ + b.i] = -b.coords;
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, std::vector<std::string> labels) {
  return LieAlgebra(dim, {}, std::move(labels));
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<LieAlgebra::BasisBracket> LieAlgebra::nonzero_brackets() const {
  std::vector<BasisBracket> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Vec& c = basis_bracket(i, j);
      if (c.cwiseAbs().maxCoeff() > 0.0) out.push_back({i, j, c});
    }
  }
  return out;
}

void LieAlgebra::check_vector(const Vec& u) const {
  if (u.size() != static_cast<Eigen::Index>(dim_)) {
    throw InputError("vector of length " + std::to_string(u.size()) + " for Lie algebra of dimension " +
                     std::to_string(dim_));
  }
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  check_vector(u);
  check_vector(v);
  Vec out = Vec::Zero(static_cast<Eigen::Index>(dim_));
  // Upper-triangle sum with weights u_i v_j - u_j v_i keeps [u,v] = -[v,u] bitwise.
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const double w = u(i) * v(j) - u(j) * v(i);
      if (w != 0.0) out += w * basis_bracket(i, j);
    }
  }
  return out;
}

Eigen::MatrixXd LieAlgebra::right_bracket_matrix(const Vec& v) const {
  check_vector(v);
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < dim_; ++i) m.col(i) = bracket(basis_vector(i), v);
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& c : table_) {
    if (c.cwiseAbs().maxCoeff() > 0.0) return false;
  }
  return true;
}

JacobiReport validate_jacobi(const LieAlgebra& algebra, double tol) {
  JacobiReport report;
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec ei = algebra.basis_vector(i), ej = algebra.basis_vector(j), ek = algebra.basis_vector(k);
        const Vec jac = algebra.bracket(algebra.basis_bracket(i, j), ek) +
                        algebra.bracket(algebra.basis_bracket(j, k), ei) +
                        algebra.bracket(algebra.basis_bracket(k, i), ej);
        const double viol = jac.cwiseAbs().maxCoeff();
        report.max_violation = std::max(report.max_violation, viol);
        if (viol > tol && !report.offending_triple) {
          report.ok = false;
          report.offending_triple = {i, j, k};
        }
      }
    }
  }
  return report;
}

AdOrbit ad_orbit(const LieAlgebra& algebra, const Vec& u, const Vec& v, std::size_t jmax, double tol) {
  if (u.size() != static_cast<Eigen::Index>(algebra.dim()) || v.size() != u.size()) {
    throw InputError("ad_orbit: vector length does not match algebra dimension");
  }
  AdOrbit orbit;
  orbit.iterates.reserve(jmax + 1);
  Vec w = u;
  for (std::size_t j = 0; j <= jmax; ++j) {
    if (!orbit.truncation && w.cwiseAbs().maxCoeff() <= tol) {
      orbit.truncation = j;
      w.setZero();
    }
    orbit.iterates.push_back(w);
    w = algebra.bracket(w, v);
  }
  return orbit;
}

StructureReport structure_report(const LieAlgebra& algebra, double rank_tol) {
  StructureReport rep;
  const auto n = static_cast<Eigen::Index>(algebra.dim());

  // center: z with [z, e_i] = 0 for all i, i.e. the common kernel of the
  // stacked right-bracket matrices.
  Eigen::MatrixXd stacked(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    stacked.middleRows(i * n, n) = algebra.right_bracket_matrix(algebra.basis_vector(i));
  }
  rep.center = linalg::nullspace(stacked, rank_tol);

  auto bracket_span = [&](const Eigen::MatrixXd& left) {
    Eigen::MatrixXd vals(n, left.cols() * n);
    for (Eigen::Index a = 0; a < left.cols(); ++a) {
      for (Eigen::Index i = 0; i < n; ++i) {
        vals.col(a * n + i) = algebra.bracket(algebra.basis_vector(i), left.col(a));
      }
    }
    if (vals.cols() == 0 || vals.cwiseAbs().maxCoeff() == 0.0) return Eigen::MatrixXd(n, 0);
    return linalg::column_span(vals, rank_tol);
  };

  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  rep.lower_central_dims.push_back(static_cast<std::size_t>(n));
  rep.derived = bracket_span(term);
  term = rep.derived;
  rep.lower_central_dims.push_back(static_cast<std::size_t>(term.cols()));
  while (term.cols() > 0) {
    Eigen::MatrixXd next = bracket_span(term);
    if (next.cols() == term.cols()) break;  // stabilised above zero
    term = next;
    rep.lower_central_dims.push_back(static_cast<std::size_t>(term.cols()));
  }

  rep.is_abelian = rep.derived.cols() == 0;
  rep.is_nilpotent = rep.lower_central_dims.back() == 0;
  if (rep.is_nilpotent) rep.nilpotency_class = rep.lower_central_dims.size() - 1;
  rep.is_two_step = rep.derived.cols() == 0 || linalg::span_contains(rep.center, rep.derived, rank_tol);
  return rep;
}

}  // namespace weham

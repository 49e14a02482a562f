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

#include "weham/action.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>

#include "weham/errors.hpp"
#include "weham/linalg.hpp"

namespace weham {

WeaklyHamiltonianAction::WeaklyHamiltonianAction(LieAlgebra algebra, PoissonStructure poisson,
                                                 std::vector<Polynomial> hamiltonians)
    : algebra_(std::move(algebra)), poisson_(std::move(poisson)), hamiltonians_(std::move(hamiltonians)) {
  if (hamiltonians_.size() != algebra_.dim()) {
    throw InputError("action has " + std::to_string(hamiltonians_.size()) + " Hamiltonians for a Lie algebra of dimension " +
                     std::to_string(algebra_.dim()));
  }
  for (std::size_t i = 0; i < hamiltonians_.size(); ++i) {
    if (hamiltonians_[i].nvars() != poisson_.nvars()) {
      throw InputError("Hamiltonian " + std::to_string(i) + " has " + std::to_string(hamiltonians_[i].nvars()) +
                       " variables, manifold has " + std::to_string(poisson_.nvars()));
    }
  }
}

Polynomial WeaklyHamiltonianAction::hamiltonian(const Vec& u) const {
  if (u.size() != static_cast<Eigen::Index>(dim())) {
    throw InputError("algebra vector of length " + std::to_string(u.size()) + ", expected " + std::to_string(dim()));
  }
  Polynomial h(nvars());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u(i) != 0.0) h += hamiltonians_[i] * u(i);
  }
  return h;
}

CocycleMatrix::CocycleMatrix(std::size_t dim, std::size_t nvars)
    : dim_(dim), nvars_(nvars), entries_(dim * dim, Polynomial(nvars)) {}

void CocycleMatrix::set(std::size_t i, std::size_t j, const Polynomial& value) {
  entries_[i * dim_ + j] = value;
  entries_[j * dim_ + i] = -value;
}

Polynomial CocycleMatrix::pair(const Vec& u, const Vec& v) const {
  Polynomial out(nvars_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u(i) == 0.0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || v(j) == 0.0) continue;
      out += (*this)(i, j) * (u(i) * v(j));
    }
  }
  return out;
}

Eigen::MatrixXd CocycleMatrix::at(const Eigen::VectorXd& x) const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = (*this)(i, j).evaluate(x);
  }
  return m;
}

bool CocycleMatrix::is_zero(double tol) const {
  for (const auto& e : entries_) {
    if (!e.is_zero(tol)) return false;
  }
  return true;
}

bool CocycleMatrix::is_constant(double tol) const {
  for (const auto& e : entries_) {
    if (!e.is_constant(tol)) return false;
  }
  return true;
}

CocycleMatrix raw_cocycle(const WeaklyHamiltonianAction& action) {
  const auto& alg = action.algebra();
  CocycleMatrix c(action.dim(), action.nvars());
  for (std::size_t i = 0; i < action.dim(); ++i) {
    for (std::size_t j = i + 1; j < action.dim(); ++j) {
      Polynomial value = action.poisson().bracket(action.hamiltonians()[i], action.hamiltonians()[j]) -
                         action.hamiltonian(alg.basis_bracket(i, j));
      c.set(i, j, value);
    }
  }
  return c;
}

ActionReport validate_action(const WeaklyHamiltonianAction& action, double tol) {
  ActionReport report;
  const CocycleMatrix c = raw_cocycle(action);
  for (std::size_t i = 0; i < action.dim(); ++i) {
    for (std::size_t j = i + 1; j < action.dim(); ++j) {
      if (!action.poisson().is_casimir(c(i, j), tol)) {
        report.ok = false;
        report.offending_pair = {i, j};
        return report;
      }
    }
  }
  return report;
}

CocycleMatrix cocycle(const WeaklyHamiltonianAction& action, double tol) {
  if (auto rep = validate_action(action, tol); !rep.ok) {
    const auto [i, j] = *rep.offending_pair;
    throw ValidationError("{H_" + action.algebra().label(i) + ", H_" + action.algebra().label(j) + "} - H_[" +
                          action.algebra().label(i) + "," + action.algebra().label(j) + "] is not a Casimir");
  }
  return raw_cocycle(action);
}

CeReport ce_check(const WeaklyHamiltonianAction& action, const CocycleMatrix& c, double tol) {
  CeReport report;
  const auto& alg = action.algebra();
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Polynomial dc = c.pair(alg.basis_bracket(i, j), alg.basis_vector(k)) +
                        c.pair(alg.basis_bracket(j, k), alg.basis_vector(i)) +
                        c.pair(alg.basis_bracket(k, i), alg.basis_vector(j));
        if (!dc.is_zero(tol)) {
          report.ok = false;
          report.offending_triple = {i, j, k};
          return report;
        }
      }
    }
  }
  return report;
}

CocycleMatrix coboundary(const LieAlgebra& algebra, const Cochain& b) {
  if (b.size() != algebra.dim()) throw InputError("cochain length does not match algebra dimension");
  const std::size_t nvars = b.empty() ? 0 : b.front().nvars();
  CocycleMatrix db(algebra.dim(), nvars);
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
      Polynomial value(nvars);
      const Vec& br = algebra.basis_bracket(i, j);
      for (std::size_t k = 0; k < algebra.dim(); ++k) {
        if (br(k) != 0.0) value -= b[k] * br(k);
      }
      db.set(i, j, value);
    }
  }
  return db;
}

namespace {

std::vector<Exponent> monomials_up_to(std::size_t nvars, int max_degree) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0u);
  // Enumerate by recursion on the variable index.
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var == nvars) {
      out.push_back(e);
      return;
    }
    for (int p = 0; p <= remaining; ++p) {
      e[var] = static_cast<unsigned>(p);
      self(self, var + 1, remaining - p);
    }
    e[var] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

}  // namespace

ExactnessResult exactness(const WeaklyHamiltonianAction& action, const CocycleMatrix& c, int max_degree, double tol) {
  if (max_degree < 0) throw InputError("exactness degree bound must be non-negative");
  if (auto ce = ce_check(action, c); !ce.ok) throw ValidationError("cochain is not closed; exactness is undefined");

  const auto& alg = action.algebra();
  const auto& poisson = action.poisson();
  const std::size_t n = alg.dim();
  const std::size_t nvars = action.nvars();
  const std::vector<Exponent> basis = monomials_up_to(nvars, max_degree);
  const std::size_t m = basis.size();

  // Rows are keyed by (equation, monomial). Equations 0..P-1 are the pairs
  // i<j of c = delta b; the rest require each b(e_k) to be a Casimir.
  std::map<std::pair<std::size_t, Exponent>, std::size_t> row_of;
  std::vector<std::tuple<std::size_t, std::size_t, double>> triplets;
  std::vector<double> rhs;
  auto row = [&](std::size_t eq, const Exponent& e) {
    auto [it, inserted] = row_of.try_emplace({eq, e}, rhs.size());
    if (inserted) rhs.push_back(0.0);
    return it->second;
  };

  std::size_t eq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++eq) {
      // c_ij + sum_k C^k_ij b_k = 0
      for (const auto& [e, coeff] : c(i, j).terms()) rhs[row(eq, e)] -= coeff;
      const Vec& br = alg.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (br(k) == 0.0) continue;
        for (std::size_t a = 0; a < m; ++a) triplets.emplace_back(row(eq, basis[a]), k * m + a, br(k));
      }
    }
  }
  std::vector<VectorField> monomial_fields;
  for (const auto& e : basis) monomial_fields.push_back(poisson.hamiltonian_vector_field(Polynomial::monomial(nvars, e, 1.0)));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < nvars; ++l, ++eq) {
      for (std::size_t a = 0; a < m; ++a) {
        for (const auto& [e, coeff] : monomial_fields[a][l].terms()) triplets.emplace_back(row(eq, e), k * m + a, coeff);
      }
    }
  }

  const auto rows = static_cast<Eigen::Index>(rhs.size());
  const auto cols = static_cast<Eigen::Index>(n * m);
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(rows, cols);
  for (const auto& [r, col, v] : triplets) mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) += v;
  const Eigen::VectorXd target = Eigen::Map<const Eigen::VectorXd>(rhs.data(), rows);

  ExactnessResult result;
  Eigen::VectorXd sol = Eigen::VectorXd::Zero(cols);
  if (rows > 0) sol = mat.completeOrthogonalDecomposition().solve(target);
  result.residual = rows > 0 ? (mat * sol - target).cwiseAbs().maxCoeff() : 0.0;
  if (result.residual > tol) return result;

  Cochain b;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::pair<Exponent, double>> terms;
    for (std::size_t a = 0; a < m; ++a) terms.emplace_back(basis[a], sol(static_cast<Eigen::Index>(k * m + a)));
    b.emplace_back(nvars, terms);
  }
  Cochain minus_b;
  for (const auto& p : b) minus_b.push_back(-p);
  const auto shifted = hamiltonian_shift(action, minus_b, tol);
  result.verified = raw_cocycle(shifted).is_zero(tol);
  result.witness = std::move(b);
  return result;
}

Eigen::MatrixXd kernel_at(const CocycleMatrix& c, const Eigen::VectorXd& x, double rank_tol) {
  return linalg::nullspace(c.at(x), rank_tol);
}

WeaklyHamiltonianAction hamiltonian_shift(const WeaklyHamiltonianAction& action, const Cochain& b, double tol) {
  if (b.size() != action.dim()) throw InputError("shift has " + std::to_string(b.size()) + " components, algebra has " +
                                                 std::to_string(action.dim()));
  std::vector<Polynomial> hams = action.hamiltonians();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!action.poisson().is_casimir(b[i], tol)) {
      throw ValidationError("shift component " + std::to_string(i) + " is not a Casimir");
    }
    hams[i] += b[i];
  }
  return WeaklyHamiltonianAction(action.algebra(), action.poisson(), std::move(hams));
}

}  // namespace weham

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

#include "weham/poisson.hpp"

#include "weham/errors.hpp"

namespace weham {

Eigen::VectorXd evaluate_field(const VectorField& field, const Eigen::VectorXd& x) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(field.size()));
  for (std::size_t i = 0; i < field.size(); ++i) out(static_cast<Eigen::Index>(i)) = field[i].evaluate(x);
  return out;
}

PoissonStructure::PoissonStructure(std::size_t nvars)
    : nvars_(nvars), entries_(nvars * nvars, Polynomial(nvars)) {}

PoissonStructure::PoissonStructure(std::size_t nvars, const std::vector<Entry>& upper)
    : PoissonStructure(nvars) {
  std::vector<bool> seen(nvars * nvars, false);
  for (std::size_t r = 0; r < upper.size(); ++r) {
    const auto& e = upper[r];
    const std::string where = "Poisson entry " + std::to_string(r);
    if (e.i >= e.j) throw InputError(where + ": requires i < j (lower triangle is implied by antisymmetry)");
    if (e.j >= nvars_) throw InputError(where + ": index out of range");
    if (e.value.nvars() != nvars_) throw InputError(where + ": polynomial has wrong number of variables");
    if (seen[e.i * nvars_ + e.j]) throw InputError(where + ": duplicate pair");
    seen[e.i * nvars_ + e.j] = true;
    entries_[e.i * nvars_ + e.j] = e.value;
    entries_[e.j * nvars_ + e.i] = -e.value;
  }
}

PoissonStructure PoissonStructure::constant_symplectic(std::size_t pairs) {
  if (pairs < 1) throw InputError("constant symplectic structure needs at least one pair");
  const std::size_t n = 2 * pairs;
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < pairs; ++i) entries.push_back({i, i + pairs, Polynomial::constant(n, 1.0)});
  return PoissonStructure(n, entries);
}

PoissonStructure PoissonStructure::lie_poisson(const LieAlgebra& algebra) {
  if (auto rep = validate_jacobi(algebra); !rep.ok) {
    const auto& t = *rep.offending_triple;
    throw ValidationError("Lie algebra fails the Jacobi identity at basis triple (" + std::to_string(t[0]) +
                          "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
  }
  const std::size_t n = algebra.dim();
  std::vector<Entry> entries;
  for (const auto& b : algebra.nonzero_brackets()) {
    Polynomial p(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (b.coords(k) != 0.0) p += Polynomial::coordinate(n, k, b.coords(k));
    }
    entries.push_back({b.i, b.j, p});
  }
  return PoissonStructure(n, entries);
}

namespace {

Polynomial embed(const Polynomial& p, std::size_t total, std::size_t offset) {
  std::vector<std::pair<Exponent, double>> terms;
  for (const auto& [exp, c] : p.terms()) {
    Exponent e(total, 0u);
    std::copy(exp.begin(), exp.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
    terms.emplace_back(std::move(e), c);
  }
  return Polynomial(total, terms);
}

}  // namespace

PoissonStructure PoissonStructure::product(const PoissonStructure& first, const PoissonStructure& second) {
  const std::size_t n1 = first.nvars(), n = n1 + second.nvars();
  std::vector<Entry> entries;
  for (const auto& e : first.nonzero_entries()) entries.push_back({e.i, e.j, embed(e.value, n, 0)});
  for (const auto& e : second.nonzero_entries()) entries.push_back({e.i + n1, e.j + n1, embed(e.value, n, n1)});
  return PoissonStructure(n, entries);
}

std::vector<PoissonStructure::Entry> PoissonStructure::nonzero_entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    for (std::size_t j = i + 1; j < nvars_; ++j) {
      if (!entry(i, j).is_zero(0.0)) out.push_back({i, j, entry(i, j)});
    }
  }
  return out;
}

void PoissonStructure::check(const Polynomial& f) const {
  if (f.nvars() != nvars_) {
    throw InputError("polynomial in " + std::to_string(f.nvars()) + " variables used with a Poisson structure on R^" +
                     std::to_string(nvars_));
  }
}

Polynomial PoissonStructure::bracket(const Polynomial& f, const Polynomial& g) const {
  check(f);
  check(g);
  std::vector<Polynomial> df, dg;
  for (std::size_t i = 0; i < nvars_; ++i) {
    df.push_back(f.derivative(i));
    dg.push_back(g.derivative(i));
  }
  Polynomial out(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (df[i].is_zero(0.0)) continue;
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (i == j || dg[j].is_zero(0.0) || entry(i, j).is_zero(0.0)) continue;
      out += entry(i, j) * df[i] * dg[j];
    }
  }
  return out;
}

VectorField PoissonStructure::hamiltonian_vector_field(const Polynomial& h) const {
  check(h);
  std::vector<Polynomial> dh;
  for (std::size_t j = 0; j < nvars_; ++j) dh.push_back(h.derivative(j));
  VectorField field(nvars_, Polynomial(nvars_));
  for (std::size_t i = 0; i < nvars_; ++i) {
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (i == j || dh[j].is_zero(0.0) || entry(i, j).is_zero(0.0)) continue;
      field[i] += entry(i, j) * dh[j];
    }
  }
  return field;
}

bool PoissonStructure::is_casimir(const Polynomial& f, double tol) const {
  for (const auto& component : hamiltonian_vector_field(f)) {
    if (!component.is_zero(tol)) return false;
  }
  return true;
}

Eigen::MatrixXd PoissonStructure::matrix_at(const Eigen::VectorXd& x) const {
  const auto n = static_cast<Eigen::Index>(nvars_);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = entry(i, j).evaluate(x);
  }
  return m;
}

PoissonReport validate_poisson(const PoissonStructure& poisson, double tol) {
  PoissonReport report;
  const std::size_t n = poisson.nvars();
  report.jacobiator = Polynomial(n);
  std::vector<Polynomial> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(Polynomial::coordinate(n, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Polynomial jac = poisson.bracket(poisson.entry(i, j), x[k]) + poisson.bracket(poisson.entry(j, k), x[i]) +
                         poisson.bracket(poisson.entry(k, i), x[j]);
        if (!jac.is_zero(tol)) {
          report.ok = false;
          report.offending_triple = {i, j, k};
          report.jacobiator = jac;
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace weham

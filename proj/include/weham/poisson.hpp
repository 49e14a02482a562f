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
#include <vector>

#include <Eigen/Dense>

#include "weham/lie_algebra.hpp"
#include "weham/polynomial.hpp"

namespace weham {

/// A vector field on R^N with polynomial components.
using VectorField = std::vector<Polynomial>;

Eigen::VectorXd evaluate_field(const VectorField& field, const Eigen::VectorXd& x);

/// Poisson bivector on R^N with polynomial entries.
///
/// Conventions used throughout the library:
///   {f, g}       = sum_ij pi_ij d_i f d_j g
///   (pi# a)_i    = sum_j pi_ij a_j
///   X_H          = pi# dH, so X_H(g) = {g, H}
class PoissonStructure {
 public:
  struct Entry {
    std::size_t i;
    std::size_t j;
    Polynomial value;
  };

  explicit PoissonStructure(std::size_t nvars = 0);
  /// Entries must have i < j; the lower triangle is filled by antisymmetry.
  PoissonStructure(std::size_t nvars, const std::vector<Entry>& upper);

  /// Darboux form on R^{2d} with coordinates (q_1..q_d, p_1..p_d), {q_i, p_i} = 1.
  static PoissonStructure constant_symplectic(std::size_t pairs);
  /// Linear structure on g*: {x_i, x_j} = <x, [e_i, e_j]>.
  static PoissonStructure lie_poisson(const LieAlgebra& algebra);
  /// Block-diagonal product; coordinates of `first` come first.
  static PoissonStructure product(const PoissonStructure& first, const PoissonStructure& second);

  std::size_t nvars() const { return nvars_; }
  const Polynomial& entry(std::size_t i, std::size_t j) const { return entries_[i * nvars_ + j]; }
  /// Nonzero entries with i < j.
  std::vector<Entry> nonzero_entries() const;

  Polynomial bracket(const Polynomial& f, const Polynomial& g) const;
  VectorField hamiltonian_vector_field(const Polynomial& h) const;
  bool is_casimir(const Polynomial& f, double tol = kCoefficientEpsilon) const;

  Eigen::MatrixXd matrix_at(const Eigen::VectorXd& x) const;

 private:
  void check(const Polynomial& f) const;

  std::size_t nvars_;
  std::vector<Polynomial> entries_;  // full antisymmetric matrix, row-major
};

struct PoissonReport {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> offending_triple;
  /// Jacobiator at the offending triple (zero polynomial when ok).
  Polynomial jacobiator;
};

/// Checks {{x_i,x_j},x_k} + cyclic = 0 identically for all i < j < k.
PoissonReport validate_poisson(const PoissonStructure& poisson, double tol = kCoefficientEpsilon);

}  // namespace weham

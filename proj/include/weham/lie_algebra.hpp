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
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace weham {

using Vec = Eigen::VectorXd;

/// Finite-dimensional real Lie algebra given by structure constants on a
/// basis e_0, ..., e_{n-1}. Only brackets [e_i, e_j] with i < j are stored;
/// the rest follow from antisymmetry.
class LieAlgebra {
 public:
  struct BasisBracket {
    std::size_t i;
    std::size_t j;
    Vec coords;
  };

  LieAlgebra(std::size_t dim, const std::vector<BasisBracket>& brackets,
             std::vector<std::string> labels = {});

  static LieAlgebra abelian(std::size_t dim, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Coordinates of [e_i, e_j] for any i, j.
  const Vec& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  /// Structure constant c^k_{ij}.
  double structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[i * dim_ + j](static_cast<Eigen::Index>(k));
  }
  /// Nonzero brackets with i < j, in (i, j) order.
  std::vector<BasisBracket> nonzero_brackets() const;

  Vec bracket(const Vec& u, const Vec& v) const;

  /// Matrix of w ↦ [w, v].
  Eigen::MatrixXd right_bracket_matrix(const Vec& v) const;

  bool is_abelian() const;

  Vec basis_vector(std::size_t i) const { return Vec::Unit(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(i)); }

 private:
  void check_vector(const Vec& u) const;

  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Vec> table_;  // dim_*dim_ entries, antisymmetric
};

struct JacobiReport {
  bool ok = true;
  /// First basis triple (i < j < k) whose Jacobiator exceeds the tolerance.
  std::optional<std::array<std::size_t, 3>> offending_triple;
  double max_violation = 0.0;
};

JacobiReport validate_jacobi(const LieAlgebra& algebra, double tol = 1e-12);

struct AdOrbit {
  /// iterates[j] = B_v^j(u), where B_v(w) = [w, v].
  std::vector<Vec> iterates;
  /// First j with B_v^j(u) = 0, if reached within jmax.
  std::optional<std::size_t> truncation;
};

AdOrbit ad_orbit(const LieAlgebra& algebra, const Vec& u, const Vec& v, std::size_t jmax,
                 double tol = 1e-12);

struct StructureReport {
  Eigen::MatrixXd center;   // columns
  Eigen::MatrixXd derived;  // columns
  /// dims of g = g^1 ⊇ g^2 = [g, g] ⊇ g^3 ⊇ ... until the series stabilises.
  std::vector<std::size_t> lower_central_dims;
  bool is_abelian = false;
  /// [g, g] ⊆ center (abelian algebras qualify).
  bool is_two_step = false;
  bool is_nilpotent = false;
  /// Number of steps for the lower central series to reach 0.
  std::optional<std::size_t> nilpotency_class;
};

StructureReport structure_report(const LieAlgebra& algebra, double rank_tol = 1e-9);

}  // namespace weham

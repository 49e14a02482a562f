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

// Small dense rank-revealing helpers. All rank decisions are made on singular
// values relative to the largest one.

#include <Eigen/Dense>

namespace weham::linalg {

inline constexpr double kDefaultRankTolerance = 1e-9;

std::size_t rank(const Eigen::MatrixXd& a, double rel_tol = kDefaultRankTolerance);

/// Basis (as columns) of { z : a z = 0 }, in reduced echelon form.
Eigen::MatrixXd nullspace(const Eigen::MatrixXd& a, double rel_tol = kDefaultRankTolerance);

/// Basis (as columns) of the column space of a, in reduced echelon form.
Eigen::MatrixXd column_span(const Eigen::MatrixXd& a, double rel_tol = kDefaultRankTolerance);

/// Rewrites the column basis b in reduced echelon form (same span). Columns
/// of the result are the transposed rows of rref(b^T), so a span of standard
/// basis vectors comes back as exactly those vectors.
Eigen::MatrixXd canonical_basis(const Eigen::MatrixXd& b, double rel_tol = kDefaultRankTolerance);

/// Dimension of span(a) ∩ span(b) for column bases a, b (same row count).
std::size_t intersection_dimension(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                   double rel_tol = kDefaultRankTolerance);

/// True if every column of inner lies in the column span of outer.
bool span_contains(const Eigen::MatrixXd& outer, const Eigen::MatrixXd& inner,
                   double rel_tol = kDefaultRankTolerance);

bool same_span(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
               double rel_tol = kDefaultRankTolerance);

}  // namespace weham::linalg

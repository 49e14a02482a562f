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

#include "weham/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace weham::linalg {

namespace {

Eigen::JacobiSVD<Eigen::MatrixXd> svd_of(const Eigen::MatrixXd& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

std::size_t rank_from_singular_values(const Eigen::VectorXd& sv, double rel_tol) {
  if (sv.size() == 0) return 0;
  const double smax = sv.maxCoeff();
  if (smax == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_tol * smax) ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Eigen::MatrixXd& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  return rank_from_singular_values(svd.singularValues(), rel_tol);
}

Eigen::MatrixXd nullspace(const Eigen::MatrixXd& a, double rel_tol) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0 || n == 0) return Eigen::MatrixXd::Identity(n, n);
  auto svd = svd_of(a);
  const auto r = static_cast<Eigen::Index>(rank_from_singular_values(svd.singularValues(), rel_tol));
  return canonical_basis(svd.matrixV().rightCols(n - r), rel_tol);
}

Eigen::MatrixXd column_span(const Eigen::MatrixXd& a, double rel_tol) {
  const Eigen::Index m = a.rows();
  if (a.cols() == 0 || m == 0) return Eigen::MatrixXd(m, 0);
  auto svd = svd_of(a);
  const auto r = static_cast<Eigen::Index>(rank_from_singular_values(svd.singularValues(), rel_tol));
  return canonical_basis(svd.matrixU().leftCols(r), rel_tol);
}

Eigen::MatrixXd canonical_basis(const Eigen::MatrixXd& b, double rel_tol) {
  // Gauss-Jordan with partial pivoting on the rows of b^T.
  Eigen::MatrixXd r = b.transpose();
  const Eigen::Index rows = r.rows();
  const Eigen::Index cols = r.cols();
  const double scale = r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
  const double tol = rel_tol * std::max(scale, 1.0);
  Eigen::Index lead = 0;
  for (Eigen::Index c = 0; c < cols && lead < rows; ++c) {
    Eigen::Index piv = lead;
    r.col(c).segment(lead, rows - lead).cwiseAbs().maxCoeff(&piv);
    piv += lead;
    if (std::abs(r(piv, c)) <= tol) continue;
    r.row(lead).swap(r.row(piv));
    r.row(lead) /= r(lead, c);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i != lead) r.row(i) -= r(i, c) * r.row(lead);
    }
    ++lead;
  }
  // Clean round-off so exact bases print as exact.
  r = r.unaryExpr([tol](double v) { return std::abs(v) <= tol ? 0.0 : v; });
  return r.topRows(lead).transpose();
}

std::size_t intersection_dimension(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                   double rel_tol) {
  Eigen::MatrixXd joined(a.rows(), a.cols() + b.cols());
  joined << a, b;
  const std::size_t ra = rank(a, rel_tol);
  const std::size_t rb = rank(b, rel_tol);
  const std::size_t rj = rank(joined, rel_tol);
  return ra + rb - rj;
}

bool span_contains(const Eigen::MatrixXd& outer, const Eigen::MatrixXd& inner, double rel_tol) {
  Eigen::MatrixXd joined(outer.rows(), outer.cols() + inner.cols());
  joined << outer, inner;
  return rank(joined, rel_tol) == rank(outer, rel_tol);
}

bool same_span(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double rel_tol) {
  return span_contains(a, b, rel_tol) && span_contains(b, a, rel_tol);
}

}  // namespace weham::linalg

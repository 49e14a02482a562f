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
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace weham {

/// Coefficients with absolute value at or below this are dropped on construction.
inline constexpr double kCoefficientEpsilon = 1e-12;

using Exponent = std::vector<unsigned>;

/// Graded lexicographic order: lower total degree first, ties broken
/// lexicographically on the exponent vector.
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

unsigned total_degree(const Exponent& e);

/// Sparse real polynomial in the coordinates x_0, ..., x_{N-1} of R^N.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, double, GradedLexLess>;

  explicit Polynomial(std::size_t nvars = 0);
  Polynomial(std::size_t nvars, const std::vector<std::pair<Exponent, double>>& terms);

  static Polynomial constant(std::size_t nvars, double value);
  static Polynomial coordinate(std::size_t nvars, std::size_t index, double coeff = 1.0);
  static Polynomial monomial(std::size_t nvars, Exponent exp, double coeff);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  double coefficient(const Exponent& exp) const;
  double constant_term() const;
  double max_abs_coefficient() const;

  bool is_zero(double tol = kCoefficientEpsilon) const;
  bool is_constant(double tol = kCoefficientEpsilon) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= -1.0; }

  Polynomial scaled(double factor) const { return *this * factor; }

  /// Exact partial derivative with respect to x_index.
  Polynomial derivative(std::size_t index) const;

  double evaluate(std::span<const double> x) const;
  double evaluate(const Eigen::VectorXd& x) const {
    return evaluate(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
  }

  /// Exact coefficientwise equality (after zero-stripping on both sides).
  bool operator==(const Polynomial& other) const = default;

  /// Human-readable form, e.g. "2*x0*x1^2 - 1". Variable names default to x<i>.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(const Exponent& exp, double coeff);
  void strip();

  std::size_t nvars_;
  TermMap terms_;
};

}  // namespace weham

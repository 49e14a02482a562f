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

#include <doctest.h>

#include "support.hpp"
#include "weham/errors.hpp"
#include "weham/polynomial.hpp"

using weham::Exponent;
using weham::Polynomial;

namespace {

Polynomial x(std::size_t n, std::size_t i, double c = 1.0) { return Polynomial::coordinate(n, i, c); }

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(x(2, 0) * x(2, 1) == Polynomial::monomial(2, {1, 1}, 1.0));
  CHECK((x(2, 0) + x(2, 1)) - x(2, 1) == x(2, 0));
  CHECK(x(6, 4).scaled(-1.0) == x(6, 4, -1.0));
  CHECK((-x(6, 4)) == x(6, 4, -1.0));
}

TEST_CASE("differentiation examples") {
  const Polynomial p = Polynomial::monomial(2, {2, 1}, 1.0);
  CHECK(p.derivative(0) == Polynomial::monomial(2, {1, 1}, 2.0));
  CHECK(x(2, 0).derivative(1).is_zero());
  CHECK(x(6, 4).derivative(4) == Polynomial::constant(6, 1.0));
  CHECK_THROWS_AS(p.derivative(2), weham::InputError);
}

TEST_CASE("evaluation examples") {
  const std::vector<double> pt{1, 0, 0, 0, 2, 0};
  CHECK((x(6, 0) + x(6, 4)).evaluate(pt) == 3.0);
  CHECK(Polynomial::constant(3, 7.0).evaluate(std::vector<double>{1.5, -2, 9}) == 7.0);
  // boost Hamiltonian m q_1 with m = 2.5 at q_1 = 2
  CHECK(x(6, 0, 2.5).evaluate(std::vector<double>{2, 0, 0, 0, 0, 0}) == 5.0);
  CHECK_THROWS_AS(x(2, 0).evaluate(std::vector<double>{1}), weham::InputError);
}

TEST_CASE("zero tests") {
  const Polynomial p = x(3, 0) * x(3, 1) + Polynomial::constant(3, 2.0);
  CHECK((p - p).is_zero(0.0));
  CHECK((x(3, 2) - x(3, 2) + x(3, 0, 1e-15)).is_zero(1e-12));
  CHECK_FALSE(x(6, 4).is_zero(1e-12));
  CHECK(Polynomial(3).degree() == -1);
}

TEST_CASE("tiny coefficients are stripped on construction") {
  const Polynomial p(2, {{Exponent{1, 0}, 1e-13}, {Exponent{0, 1}, 2.0}});
  CHECK(p.terms().size() == 1);
  CHECK(p.coefficient({0, 1}) == 2.0);
}

TEST_CASE("nvars mismatch is an input error") {
  CHECK_THROWS_AS(x(2, 0) + x(3, 0), weham::InputError);
  CHECK_THROWS_AS(x(2, 0) * x(3, 0), weham::InputError);
  CHECK_THROWS_AS(x(2, 2), weham::InputError);
  CHECK_THROWS_AS(Polynomial(2, {{Exponent{1}, 1.0}}), weham::InputError);
}

TEST_CASE("graded lexicographic order and printing") {
  const Polynomial p = x(2, 0) * x(2, 0) + x(2, 1) - Polynomial::constant(2, 3.0);
  std::vector<int> degrees;
  for (const auto& [e, c] : p.terms()) degrees.push_back(static_cast<int>(weham::total_degree(e)));
  CHECK(std::is_sorted(degrees.begin(), degrees.end()));
  CHECK(x(2, 0, -1.0).to_string({"q", "p"}) == "-q");
  CHECK(Polynomial(2).to_string({"q", "p"}) == "0");
}

TEST_CASE("property: ring axioms and degree additivity") {
  weham::SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.next() % 4;
    const Polynomial p = weham::testing::random_polynomial(rng, n, 1 + rng.next() % 4);
    const Polynomial q = weham::testing::random_polynomial(rng, n, 1 + rng.next() % 4);
    const Polynomial r = weham::testing::random_polynomial(rng, n, 1 + rng.next() % 4);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p + (-p) == Polynomial(n));
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("property: mixed partials commute") {
  weham::SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.next() % 3;
    const Polynomial p = weham::testing::random_polynomial(rng, n, 5, 3);
    const std::size_t i = rng.next() % n;
    const std::size_t j = rng.next() % n;
    CHECK(p.derivative(i).derivative(j) == p.derivative(j).derivative(i));
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  weham::SplitMix64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.next() % 4;
    const Polynomial p = weham::testing::random_polynomial(rng, n, 4);
    const Polynomial q = weham::testing::random_polynomial(rng, n, 4);
    const Eigen::VectorXd pt = weham::testing::random_point(rng, n);
    const double lhs = (p * q).evaluate(pt);
    const double rhs = p.evaluate(pt) * q.evaluate(pt);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    CHECK(std::abs((p + q).evaluate(pt) - p.evaluate(pt) - q.evaluate(pt)) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

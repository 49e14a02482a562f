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
#include "weham/action.hpp"
#include "weham/errors.hpp"
#include "weham/flow.hpp"
#include "weham/linalg.hpp"
#include "weham/scenario.hpp"

using weham::Cochain;
using weham::LieAlgebra;
using weham::PoissonStructure;
using weham::Polynomial;
using weham::WeaklyHamiltonianAction;

namespace {

Polynomial x(std::size_t n, std::size_t i, double c = 1.0) { return Polynomial::coordinate(n, i, c); }
Polynomial one(std::size_t n, double c = 1.0) { return Polynomial::constant(n, c); }

WeaklyHamiltonianAction translations_r2() {
  return {LieAlgebra::abelian(2), PoissonStructure::constant_symplectic(1), {x(2, 1), x(2, 0, -1.0)}};
}

WeaklyHamiltonianAction heisenberg_coadjoint() {
  return {weham::heisenberg_algebra(), PoissonStructure::lie_poisson(weham::heisenberg_algebra()),
          {x(3, 0), x(3, 1), x(3, 2)}};
}

WeaklyHamiltonianAction galilean(double m) {
  // coordinates (q1,q2,q3,p1,p2,p3); boosts B_i then translations T_i
  std::vector<Polynomial> h;
  for (std::size_t i = 0; i < 3; ++i) h.push_back(x(6, i, m));
  for (std::size_t i = 0; i < 3; ++i) h.push_back(x(6, 3 + i));
  return {LieAlgebra::abelian(6), PoissonStructure::constant_symplectic(3), h};
}

WeaklyHamiltonianAction partial_kernel() {
  return {LieAlgebra::abelian(3), PoissonStructure::constant_symplectic(2), {x(4, 0), x(4, 2), x(4, 1)}};
}

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double d : v) out(i++) = d;
  return out;
}

}  // namespace

TEST_CASE("action constructor checks dimensions") {
  CHECK_THROWS_AS(WeaklyHamiltonianAction(LieAlgebra::abelian(2), PoissonStructure::constant_symplectic(1), {x(2, 0)}),
                  weham::InputError);
  CHECK_THROWS_AS(
      WeaklyHamiltonianAction(LieAlgebra::abelian(1), PoissonStructure::constant_symplectic(1), {x(3, 0)}),
      weham::InputError);
}

TEST_CASE("validate_action examples") {
  CHECK(weham::validate_action(translations_r2()).ok);
  CHECK(weham::cocycle(translations_r2())(0, 1) == one(2));
  CHECK(weham::validate_action(heisenberg_coadjoint()).ok);
  CHECK(weham::cocycle(heisenberg_coadjoint()).is_zero());
  const WeaklyHamiltonianAction single(LieAlgebra::abelian(1), PoissonStructure::constant_symplectic(1),
                                       {x(2, 0) * x(2, 0)});
  CHECK(weham::validate_action(single).ok);

  const WeaklyHamiltonianAction corrupt(LieAlgebra::abelian(2), PoissonStructure::constant_symplectic(1),
                                        {x(2, 1), x(2, 0) * x(2, 1)});
  const auto r = weham::validate_action(corrupt);
  CHECK_FALSE(r.ok);
  CHECK(*r.offending_pair == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK_THROWS_AS(weham::cocycle(corrupt), weham::ValidationError);
}

TEST_CASE("cocycle examples") {
  for (double m : {1.0, 2.5}) {
    const auto c = weham::cocycle(galilean(m));
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        double expected = 0.0;
        if (i < 3 && j == i + 3) expected = m;
        if (j < 3 && i == j + 3) expected = -m;
        CHECK(c(i, j) == one(6, expected));
      }
    }
  }
  const double a = -1.0;
  const LieAlgebra a65 = weham::a65a_algebra(a);
  const WeaklyHamiltonianAction a65_action(LieAlgebra::abelian(4), PoissonStructure::lie_poisson(a65),
                                           {x(6, 0), x(6, 1), x(6, 2), x(6, 3)});
  const auto c = weham::cocycle(a65_action);
  CHECK(c(0, 2) == x(6, 4));
  CHECK(c(0, 3) == x(6, 5));
  CHECK(c(1, 2) == x(6, 5, a));
  CHECK(c(1, 3) == x(6, 4));
  CHECK(c(0, 1).is_zero());
  CHECK(c(2, 3).is_zero());
  CHECK(c(2, 0) == x(6, 4, -1.0));
}

TEST_CASE("ce_check examples") {
  const auto t = translations_r2();
  CHECK(weham::ce_check(t, weham::cocycle(t)).ok);
  const auto shifted = weham::builtin("heisenberg-shifted").action;
  const auto cs = weham::cocycle(shifted);
  CHECK(weham::ce_check(shifted, cs).ok);

  // three-step algebra: [e0,e1]=e2, [e0,e2]=e3 ; a c with c(e2,e1) nonzero breaks closedness
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(4, 4);
  const LieAlgebra filiform(4, {{0, 1, id.col(2)}, {0, 2, id.col(3)}});
  const WeaklyHamiltonianAction f(filiform, PoissonStructure(2), {one(2, 0.0), one(2, 0.0), one(2, 0.0), one(2, 0.0)});
  weham::CocycleMatrix bad(4, 2);
  bad.set(2, 3, one(2, 1.0));  // -c([e0,e1],e3) survives on (e0,e1,e3)
  const auto r = weham::ce_check(f, bad);
  CHECK_FALSE(r.ok);
  REQUIRE(r.offending_triple);
  CHECK(*r.offending_triple == std::array<std::size_t, 3>{0, 1, 3});
  weham::CocycleMatrix good(4, 2);
  good.set(0, 3, one(2, 1.0));
  good.set(1, 2, one(2, 1.0));
  CHECK(weham::ce_check(f, good).ok);
}

TEST_CASE("exactness examples") {
  const auto t = translations_r2();
  CHECK_FALSE(weham::exactness(t, weham::cocycle(t)).exact());
  for (double m : {1.0, 2.5}) CHECK_FALSE(weham::exactness(galilean(m), weham::cocycle(galilean(m))).exact());

  const auto shifted = weham::builtin("heisenberg-shifted").action;
  const auto cs = weham::cocycle(shifted);
  CHECK(cs(0, 1) == one(3, -1.0));
  const auto ex = weham::exactness(shifted, cs);
  REQUIRE(ex.exact());
  CHECK(ex.verified);
  CHECK(std::abs((*ex.witness)[2].evaluate(vec({0.3, -1, 2})) - 1.0) <= 1e-9);
  CHECK((weham::coboundary(shifted.algebra(), *ex.witness)(0, 1) - cs(0, 1)).is_zero(1e-9));

  const auto h = heisenberg_coadjoint();
  const auto zero = weham::exactness(h, weham::cocycle(h));
  REQUIRE(zero.exact());
  for (const auto& b : *zero.witness) CHECK(b.is_zero(1e-9));
}

TEST_CASE("hamiltonian_shift examples") {
  const auto h = heisenberg_coadjoint();
  const Cochain zero(3, Polynomial(3));
  const auto same = weham::hamiltonian_shift(h, zero);
  for (std::size_t i = 0; i < 3; ++i) CHECK(same.hamiltonians()[i] == h.hamiltonians()[i]);

  const Cochain bz{Polynomial(3), Polynomial(3), one(3)};
  const auto shifted = weham::hamiltonian_shift(h, bz);
  CHECK(weham::cocycle(shifted)(0, 1) == one(3, -1.0));

  const auto t = translations_r2();
  const auto moved = weham::hamiltonian_shift(t, Cochain{one(2, 3.0), one(2, -0.5)});
  CHECK(weham::cocycle(moved)(0, 1) == weham::cocycle(t)(0, 1));

  CHECK_THROWS_AS(weham::hamiltonian_shift(h, Cochain{x(3, 0), Polynomial(3), Polynomial(3)}), weham::ValidationError);
}

TEST_CASE("kernel_at examples") {
  const auto pk = partial_kernel();
  const auto c = weham::cocycle(pk);
  CHECK(c(0, 1) == one(4));
  CHECK(c(0, 2).is_zero());
  CHECK(c(1, 2).is_zero());
  for (const auto& pt : {vec({0, 0, 0, 0}), vec({1, -2, 0.5, 3})}) {
    CHECK(weham::linalg::same_span(weham::kernel_at(c, pt), Eigen::VectorXd::Unit(3, 2)));
  }
  const auto g = galilean(2.0);
  CHECK(weham::kernel_at(weham::cocycle(g), vec({1, 2, 3, 4, 5, 6})).cols() == 0);

  const WeaklyHamiltonianAction a65_action(LieAlgebra::abelian(4), PoissonStructure::lie_poisson(weham::a65a_algebra(-1)),
                                           {x(6, 0), x(6, 1), x(6, 2), x(6, 3)});
  const auto ca = weham::cocycle(a65_action);
  CHECK(std::abs(ca.at(vec({0, 0, 0, 0, 1, 0})).determinant() - 1.0) < 1e-12);
  CHECK(weham::kernel_at(ca, vec({0.2, 0, 0, 0, 1, 0})).cols() == 0);
  CHECK(weham::kernel_at(ca, vec({0.2, 0, 0, 0, 0, 0})).cols() == 4);
}

TEST_CASE("property: catalog cocycles are Casimir-valued and CE-closed") {
  for (const auto& name : weham::builtin_names()) {
    const auto s = weham::builtin(name);
    const auto c = weham::cocycle(s.action);
    for (std::size_t i = 0; i < c.dim(); ++i) {
      for (std::size_t j = 0; j < c.dim(); ++j) {
        CHECK(s.action.poisson().is_casimir(c(i, j)));
        CHECK((c(i, j) + c(j, i)).is_zero());
      }
    }
    CHECK(weham::ce_check(s.action, c).ok);
  }
}

TEST_CASE("property: shifting transforms the cocycle by the coboundary") {
  weham::SplitMix64 rng(29);
  const auto h = heisenberg_coadjoint();
  const auto c0 = weham::cocycle(h);
  for (int trial = 0; trial < 30; ++trial) {
    // Casimirs of the Heisenberg structure: polynomials in x3
    Cochain b;
    for (int k = 0; k < 3; ++k) {
      Polynomial bk = one(3, static_cast<double>(static_cast<int>(rng.next() % 7) - 3));
      bk += x(3, 2, static_cast<double>(static_cast<int>(rng.next() % 5) - 2));
      bk += x(3, 2) * x(3, 2) * one(3, static_cast<double>(static_cast<int>(rng.next() % 3) - 1));
      b.push_back(bk);
    }
    const auto c1 = weham::cocycle(weham::hamiltonian_shift(h, b));
    const auto db = weham::coboundary(h.algebra(), b);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) CHECK((c1(i, j) - c0(i, j) - db(i, j)).is_zero());
    }
    const auto ex = weham::exactness(weham::hamiltonian_shift(h, b), c1);
    REQUIRE(ex.exact());
    Cochain minus;
    for (const auto& w : *ex.witness) minus.push_back(-w);
    CHECK(weham::cocycle(weham::hamiltonian_shift(weham::hamiltonian_shift(h, b), minus)).is_zero(1e-9));
  }
  // abelian algebras: cocycle is shift-invariant
  const auto t = partial_kernel();
  const auto ct = weham::cocycle(t);
  const auto shifted = weham::hamiltonian_shift(t, Cochain{one(4, 2), one(4, -1), one(4, 5)});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(weham::cocycle(shifted)(i, j) == ct(i, j));
  }
}

TEST_CASE("property: the kernel is constant along leaves") {
  weham::SplitMix64 rng(31);
  const auto s = weham::builtin("a65a(-1)");
  const auto c = weham::cocycle(s.action);
  const auto& hs = s.action.hamiltonians();
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::VectorXd y = weham::testing::random_point(rng, 6);
    Eigen::VectorXd z = y;
    // wander along the leaf using flows of the action Hamiltonians
    for (int leg = 0; leg < 3; ++leg) {
      const auto& h = hs[rng.next() % hs.size()];
      z = weham::flow_endpoint(s.action.poisson(), h, z, rng.uniform(-1, 1), 1e-2);
    }
    CHECK(weham::linalg::same_span(weham::kernel_at(c, y), weham::kernel_at(c, z)));
    CHECK(weham::testing::max_abs(c.at(y) - c.at(z)) <= 1e-10);
  }
  // degenerate leaf: x5 = x6 = 0 gives the whole algebra as kernel
  Eigen::VectorXd d = Eigen::VectorXd::Zero(6);
  d.head(4) << 1, 2, 3, 4;
  const auto k0 = weham::kernel_at(c, d);
  const auto k1 = weham::kernel_at(c, weham::flow_endpoint(s.action.poisson(), hs[0], d, 0.7));
  CHECK(weham::linalg::same_span(k0, k1));
}

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

#include <cmath>

#include "support.hpp"
#include "weham/errors.hpp"
#include "weham/flow.hpp"
#include "weham/scenario.hpp"

using weham::PoissonStructure;
using weham::Polynomial;
using weham::Vec;

namespace {

Polynomial x(std::size_t n, std::size_t i, double c = 1.0) { return Polynomial::coordinate(n, i, c); }

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double d : v) out(i++) = d;
  return out;
}

// Closed-form flow of H = (x1^2 + x2^2)/2 on the Heisenberg Lie-Poisson space:
// a rotation in (x1, x2) with angular speed x3.
Eigen::VectorXd rotation_oracle(const Eigen::VectorXd& x0, double t) {
  const double w = x0(2) * t;
  return vec({x0(0) * std::cos(w) + x0(1) * std::sin(w), -x0(0) * std::sin(w) + x0(1) * std::cos(w), x0(2)});
}

}  // namespace

TEST_CASE("integrate examples") {
  const auto std2 = PoissonStructure::constant_symplectic(1);
  const auto traj = weham::integrate(std2, x(2, 1), vec({0, 0}), 1.0, 10);
  CHECK((traj.endpoint() - vec({1, 0})).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(traj.times.size() == 11);
  for (std::size_t k = 1; k < traj.times.size(); ++k) CHECK(traj.times[k] > traj.times[k - 1]);

  const auto h = PoissonStructure::lie_poisson(weham::heisenberg_algebra());
  const auto still = weham::integrate(h, x(3, 2) * x(3, 2), vec({1, 2, 3}), 4.0, 50);
  for (const auto& p : still.points) CHECK(p == vec({1, 2, 3}));

  for (double s : {-3.0, 0.5, 2.0}) {
    const auto shear = weham::integrate(h, x(3, 1), vec({1, -1, 2}), s, 100);
    CHECK((shear.endpoint() - vec({1 + 2 * s, -1, 2})).cwiseAbs().maxCoeff() <= 1e-10);
  }
  CHECK_THROWS_AS(weham::integrate(std2, x(2, 1), vec({0, 0}), 1.0, 0), weham::InputError);
}

TEST_CASE("blow-up is reported, not thrown") {
  const auto std2 = PoissonStructure::constant_symplectic(1);
  const Polynomial h = Polynomial::monomial(2, {0, 3}, 1.0 / 3.0);  // X_H = (x2^2, 0)
  const auto fine = weham::integrate(std2, h, vec({0, 1}), 1.0, 10);
  CHECK_FALSE(fine.blew_up);
  CHECK(fine.endpoint()(0) == doctest::Approx(1.0));
  // x' = x^2 from x = 1 escapes at t = 1
  const weham::VectorField riccati{Polynomial::monomial(1, {2}, 1.0)};
  const auto boom = weham::integrate_field(riccati, vec({1.0}), 2.0, 2000);
  CHECK(boom.blew_up);
  CHECK(boom.times.size() == boom.points.size());
  CHECK_THROWS_AS(weham::flow_endpoint(PoissonStructure(1), Polynomial(1), vec({0}), 1.0, 0.0), weham::InputError);
}

TEST_CASE("zeta_numeric examples") {
  const auto t = weham::builtin("translations-r2").action;
  const std::vector<double> grid{-2, -0.5, 0, 1, 3};
  const auto z = weham::zeta_numeric(t, Vec::Unit(2, 0), Vec::Unit(2, 1), vec({0, 0}), grid);
  for (std::size_t k = 0; k < grid.size(); ++k) CHECK(std::abs(z[k] - grid[k]) <= 1e-12);

  const auto h = weham::builtin("heisenberg-coadjoint").action;
  const Vec X = Vec::Unit(3, 0), Y = Vec::Unit(3, 1), Z = Vec::Unit(3, 2);
  const auto zc = weham::zeta_numeric(h, Z, Y, vec({1, 4, 2}), grid);
  for (double v : zc) CHECK(v == 2.0);
  const auto zs = weham::zeta_numeric(h, X, Y, vec({0.5, 1, -1.5}), grid);
  for (std::size_t k = 0; k < grid.size(); ++k) CHECK(std::abs(zs[k] - (0.5 - 1.5 * grid[k])) <= 1e-10);
}

TEST_CASE("zeta_series examples") {
  const auto t = weham::builtin("translations-r2").action;
  const Eigen::VectorXd y = vec({0.7, -1.1});
  const auto st = weham::zeta_series(t, Vec::Unit(2, 0), Vec::Unit(2, 1), y, 4);
  CHECK(st.truncated);
  CHECK(st.coeffs[0] == doctest::Approx(-1.1));  // H_{e1} = x2
  CHECK(st.coeffs[1] == doctest::Approx(1.0));   // c(e1,e2)
  for (std::size_t j = 2; j < st.coeffs.size(); ++j) CHECK(st.coeffs[j] == 0.0);

  const auto h = weham::builtin("heisenberg-coadjoint").action;
  const auto sh = weham::zeta_series(h, Vec::Unit(3, 0), Vec::Unit(3, 1), vec({1, 0, 2}), 8);
  CHECK(sh.truncated);
  CHECK(sh.coeffs[0] == 1.0);
  CHECK(sh.coeffs[1] == 2.0);
  for (std::size_t j = 2; j < sh.coeffs.size(); ++j) CHECK(sh.coeffs[j] == 0.0);

  const auto central = weham::zeta_series(h, Vec::Unit(3, 0), Vec::Unit(3, 2), vec({1, 0, 2}), 3);
  CHECK(central.coeffs == std::vector<double>{1, 0, 0, 0});

  CHECK_THROWS_AS(weham::zeta_series(h, Vec::Unit(3, 0), Vec::Unit(3, 1), vec({1, 0, 2}), 0), weham::InputError);
}

TEST_CASE("compare_zeta examples") {
  const auto t = weham::builtin("translations-r2").action;
  CHECK(weham::compare_zeta(t, Vec::Unit(2, 0), Vec::Unit(2, 1), vec({0.3, 0.4}), -5, 5, 101).max_deviation <= 1e-6);

  const auto a = weham::builtin("a65a(-1)");
  const Eigen::VectorXd pt = vec({0.3, -0.2, 0.5, 0.1, 1.5, -0.7});
  const auto cmp = weham::compare_zeta(a.action, Vec::Unit(4, 0), Vec::Unit(4, 2), pt, -5, 5, 101);
  CHECK(cmp.truncated);
  CHECK(cmp.max_deviation <= 1e-6);
  for (std::size_t k = 0; k < cmp.s.size(); ++k) CHECK(std::abs(cmp.series[k] - (0.3 + 1.5 * cmp.s[k])) <= 1e-12);

  const auto h = weham::builtin("heisenberg-coadjoint").action;
  const Vec u = vec({1, -2, 0.5});
  CHECK(weham::compare_zeta(h, u, u, vec({1, 2, 3}), -5, 5, 51).max_deviation <= 1e-10);
}

TEST_CASE("orbit_levelset_check examples") {
  const auto h = weham::builtin("heisenberg-coadjoint").action;
  const Vec X = Vec::Unit(3, 0), Y = Vec::Unit(3, 1);
  const auto fixed = weham::orbit_levelset_check(h, X, Y, vec({1, 0, 0}), 10.0, 1000);
  CHECK(fixed.truncated);
  for (double v : fixed.variations) CHECK(v == 0.0);
  CHECK(fixed.coefficient_functions[0] == x(3, 2));
  CHECK(fixed.initial_values[0] == 0.0);
  CHECK(fixed.hamiltonian_variation == 0.0);

  const auto moving = weham::orbit_levelset_check(h, X, Y, vec({1, 0, 2}), 10.0, 1000);
  CHECK(moving.initial_values[0] == 2.0);
  CHECK(moving.hamiltonian_variation == doctest::Approx(20.0).epsilon(1e-9));
  const auto longer = weham::orbit_levelset_check(h, X, Y, vec({1, 0, 2}), 40.0, 4000);
  CHECK(longer.hamiltonian_variation > 3 * moving.hamiltonian_variation);

  const auto t = weham::builtin("translations-r2n(2)").action;
  const auto flat = weham::orbit_levelset_check(t, Vec::Unit(4, 0), Vec::Unit(4, 2), vec({1, 2, 3, 4}), 1.0, 100);
  for (std::size_t j = 1; j < flat.coefficient_functions.size(); ++j) CHECK(flat.coefficient_functions[j].is_zero());
}

TEST_CASE("property: RK4 converges at fourth order") {
  const auto h = PoissonStructure::lie_poisson(weham::heisenberg_algebra());
  const Polynomial energy = (x(3, 0) * x(3, 0) + x(3, 1) * x(3, 1)).scaled(0.5);
  const Eigen::VectorXd x0 = vec({1.0, 0.5, 2.0});
  const double t = 2.0;
  const Eigen::VectorXd exact = rotation_oracle(x0, t);
  std::vector<double> errors;
  for (std::size_t steps : {20, 40, 80}) {
    errors.push_back((weham::integrate(h, energy, x0, t, steps).endpoint() - exact).norm());
  }
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    const double ratio = errors[k] / errors[k + 1];
    CHECK(ratio >= 14.0);
    CHECK(ratio <= 18.0);
  }
  const auto rich = weham::richardson(h, energy, x0, t, 40);
  CHECK((rich.endpoint - exact).norm() < errors[1]);
  CHECK(rich.error_estimate > 0.0);
}

TEST_CASE("property: energy and Casimirs are conserved") {
  weham::SplitMix64 rng(37);
  for (const auto& name : weham::builtin_names()) {
    const auto s = weham::builtin(name);
    const auto& p = s.action.poisson();
    for (const auto& hv : s.action.hamiltonians()) {
      const auto traj = weham::integrate(p, hv, weham::testing::random_point(rng, s.manifold_dim()), 2.0, 2000);
      REQUIRE_FALSE(traj.blew_up);
      CHECK(weham::variation_along(hv, traj) <= 1e-8);
      const auto c = weham::cocycle(s.action);
      for (std::size_t i = 0; i < c.dim(); ++i) {
        for (std::size_t j = i + 1; j < c.dim(); ++j) CHECK(weham::variation_along(c(i, j), traj) <= 1e-8);
      }
    }
  }
  const auto h = PoissonStructure::lie_poisson(weham::heisenberg_algebra());
  const Polynomial energy = (x(3, 0) * x(3, 0) + x(3, 1) * x(3, 1)).scaled(0.5);
  const auto traj = weham::integrate(h, energy, vec({1, 0.5, 2}), 10.0, 10000);
  CHECK(weham::variation_along(energy, traj) <= 1e-8);
  CHECK(weham::variation_along(x(3, 2), traj) <= 1e-8);
}

TEST_CASE("property: finite-difference slope of zeta matches the first coefficient") {
  weham::SplitMix64 rng(41);
  for (const std::string name : {"translations-r2n(2)", "galilean(2.5)", "a65a(-1)", "heisenberg-coadjoint",
                                 "heisenberg-shifted"}) {
    const auto s = weham::builtin(name);
    const auto n = s.action.dim();
    for (int trial = 0; trial < 5; ++trial) {
      const Vec u = weham::testing::random_point(rng, n, 1.0);
      const Vec v = weham::testing::random_point(rng, n, 1.0);
      const Eigen::VectorXd pt = weham::testing::random_point(rng, s.manifold_dim());
      const double d = 1e-3;
      const auto z = weham::zeta_numeric(s.action, u, v, pt, {-d, d}, 1e-4);
      const double slope = (z[1] - z[0]) / (2 * d);
      const auto series = weham::zeta_series(s.action, u, v, pt, 4);
      CHECK(std::abs(slope - series.coeffs[1]) <= 1e-5);
      CHECK(std::abs(weham::zeta_numeric(s.action, u, v, pt, {0.0})[0] - series.coeffs[0]) <= 1e-12);
    }
  }
}

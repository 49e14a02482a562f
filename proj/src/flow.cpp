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

#include "weham/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "weham/errors.hpp"

namespace weham {

namespace {

std::size_t steps_for(double t, double step) {
  if (!(step > 0.0)) throw InputError("flow step must be positive");
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::abs(t) / step - 1e-9)));
}

Eigen::VectorXd rk4_step(const VectorField& f, const Eigen::VectorXd& x, double h) {
  const Eigen::VectorXd k1 = evaluate_field(f, x);
  const Eigen::VectorXd x2 = x + 0.5 * h * k1;
  const Eigen::VectorXd k2 = evaluate_field(f, x2);
  const Eigen::VectorXd x3 = x + 0.5 * h * k2;
  const Eigen::VectorXd k3 = evaluate_field(f, x3);
  const Eigen::VectorXd x4 = x + h * k3;
  const Eigen::VectorXd k4 = evaluate_field(f, x4);
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

bool escaped(const Eigen::VectorXd& x, double radius) { return !x.allFinite() || x.norm() > radius; }

}  // namespace

Trajectory integrate_field(const VectorField& field, const Eigen::VectorXd& x0, double t, std::size_t steps,
                           double blowup_radius) {
  if (steps < 1) throw InputError("integrate: steps must be at least 1");
  if (x0.size() != static_cast<Eigen::Index>(field.size())) {
    throw InputError("integrate: initial point has wrong dimension");
  }
  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.points.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.points.push_back(x0);
  const double h = t / static_cast<double>(steps);
  Eigen::VectorXd x = x0;
  for (std::size_t k = 1; k <= steps; ++k) {
    x = rk4_step(field, x, h);
    if (escaped(x, blowup_radius)) {
      traj.blew_up = true;
      break;
    }
    traj.times.push_back(h * static_cast<double>(k));
    traj.points.push_back(x);
  }
  return traj;
}

Trajectory integrate(const PoissonStructure& poisson, const Polynomial& h, const Eigen::VectorXd& x0, double t,
                     std::size_t steps, double blowup_radius) {
  return integrate_field(poisson.hamiltonian_vector_field(h), x0, t, steps, blowup_radius);
}

Eigen::VectorXd flow_endpoint(const PoissonStructure& poisson, const Polynomial& h, const Eigen::VectorXd& x0,
                              double t, double step) {
  if (t == 0.0) return x0;
  const auto traj = integrate(poisson, h, x0, t, steps_for(t, step));
  if (traj.blew_up) throw NumericalError("flow left the ball of radius 1e8 (possible incompleteness)");
  return traj.endpoint();
}

RichardsonEstimate richardson(const PoissonStructure& poisson, const Polynomial& h, const Eigen::VectorXd& x0,
                              double t, std::size_t steps) {
  const auto field = poisson.hamiltonian_vector_field(h);
  const auto coarse = integrate_field(field, x0, t, steps);
  const auto fine = integrate_field(field, x0, t, 2 * steps);
  if (coarse.blew_up || fine.blew_up) throw NumericalError("flow blew up during Richardson estimate");
  const Eigen::VectorXd diff = fine.endpoint() - coarse.endpoint();
  return {fine.endpoint() + diff / 15.0, diff.norm() / 15.0};
}

double variation_along(const Polynomial& f, const Trajectory& trajectory) {
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& p : trajectory.points) {
    const double v = f.evaluate(p);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return trajectory.points.empty() ? 0.0 : hi - lo;
}

std::vector<double> zeta_numeric(const WeaklyHamiltonianAction& action, const Vec& u, const Vec& v,
                                 const Eigen::VectorXd& x, const std::vector<double>& s_grid, double step) {
  const Polynomial hu = action.hamiltonian(u);
  const VectorField field = action.poisson().hamiltonian_vector_field(action.hamiltonian(v));
  std::vector<double> out(s_grid.size());

  std::vector<std::size_t> order(s_grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s_grid[a] < s_grid[b]; });
  const auto first_nonneg = std::find_if(order.begin(), order.end(), [&](std::size_t i) { return s_grid[i] >= 0.0; });

  auto march = [&](auto begin, auto end) {
    Eigen::VectorXd cur = x;
    double s_cur = 0.0;
    for (auto it = begin; it != end; ++it) {
      const double s = s_grid[*it];
      if (!std::isfinite(s)) throw InputError("zeta grid contains a non-finite value");
      const double ds = s - s_cur;
      if (ds != 0.0) {
        const auto traj = integrate_field(field, cur, ds, steps_for(ds, step));
        if (traj.blew_up) throw NumericalError("flow blew up while evaluating zeta");
        cur = traj.endpoint();
        s_cur = s;
      }
      out[*it] = hu.evaluate(cur);
    }
  };
  march(first_nonneg, order.end());
  march(std::make_reverse_iterator(first_nonneg), order.rend());
  return out;
}

ZetaCoefficientFunctions zeta_coefficient_functions(const WeaklyHamiltonianAction& action, const Vec& u,
                                                    const Vec& v, std::size_t jmax) {
  const CocycleMatrix c = cocycle(action);
  const AdOrbit orbit = ad_orbit(action.algebra(), u, v, jmax);
  ZetaCoefficientFunctions out;
  out.truncated = orbit.truncation.has_value();
  out.functions.push_back(action.hamiltonian(orbit.iterates[0]));
  for (std::size_t j = 1; j <= jmax; ++j) {
    out.functions.push_back(action.hamiltonian(orbit.iterates[j]) + c.pair(orbit.iterates[j - 1], v));
  }
  return out;
}

double ZetaSeries::evaluate(double s) const {
  double sum = 0.0, term = 1.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (j > 0) term *= s / static_cast<double>(j);
    sum += coeffs[j] * term;
  }
  return sum;
}

ZetaSeries zeta_series(const WeaklyHamiltonianAction& action, const Vec& u, const Vec& v, const Eigen::VectorXd& x,
                       std::size_t jmax) {
  if (jmax < 1) throw InputError("zeta_series: jmax must be at least 1");
  const auto fns = zeta_coefficient_functions(action, u, v, jmax);
  ZetaSeries series;
  series.truncated = fns.truncated;
  for (const auto& f : fns.functions) series.coeffs.push_back(f.evaluate(x));
  return series;
}

ZetaComparison compare_zeta(const WeaklyHamiltonianAction& action, const Vec& u, const Vec& v,
                            const Eigen::VectorXd& x, double s_min, double s_max, std::size_t samples,
                            std::size_t jmax, double step) {
  if (samples < 2) throw InputError("compare_zeta: need at least two samples");
  if (!(s_max > s_min)) throw InputError("compare_zeta: s_max must exceed s_min");
  ZetaComparison cmp;
  for (std::size_t k = 0; k < samples; ++k) {
    cmp.s.push_back(s_min + (s_max - s_min) * static_cast<double>(k) / static_cast<double>(samples - 1));
  }
  const ZetaSeries series = zeta_series(action, u, v, x, jmax);
  cmp.truncated = series.truncated;
  cmp.numeric = zeta_numeric(action, u, v, x, cmp.s, step);
  for (std::size_t k = 0; k < samples; ++k) {
    cmp.series.push_back(series.evaluate(cmp.s[k]));
    cmp.abs_diff.push_back(std::abs(cmp.numeric[k] - cmp.series[k]));
    cmp.max_deviation = std::max(cmp.max_deviation, cmp.abs_diff[k]);
  }
  return cmp;
}

OrbitCheck orbit_levelset_check(const WeaklyHamiltonianAction& action, const Vec& u, const Vec& v,
                                const Eigen::VectorXd& x0, double t, std::size_t steps, std::size_t jmax) {
  const auto fns = zeta_coefficient_functions(action, u, v, jmax);
  const auto traj = integrate(action.poisson(), action.hamiltonian(v), x0, t, steps);
  OrbitCheck check;
  check.truncated = fns.truncated;
  check.blew_up = traj.blew_up;
  for (std::size_t j = 1; j < fns.functions.size(); ++j) {
    check.coefficient_functions.push_back(fns.functions[j]);
    check.initial_values.push_back(fns.functions[j].evaluate(x0));
    check.variations.push_back(variation_along(fns.functions[j], traj));
  }
  check.hamiltonian_variation = variation_along(fns.functions[0], traj);
  return check;
}

}  // namespace weham

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
#include <vector>

#include <Eigen/Dense>

#include "weham/action.hpp"
#include "weham/poisson.hpp"

namespace weham {

inline constexpr double kDefaultFlowStep = 1e-3;
inline constexpr double kBlowUpRadius = 1e8;

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> points;
  /// Integration stopped because |x| exceeded the blow-up radius.
  bool blew_up = false;

  const Eigen::VectorXd& endpoint() const { return points.back(); }
};

/// Classical RK4 with fixed step t/steps on x' = X_H(x). Negative t integrates
/// backwards.
Trajectory integrate(const PoissonStructure& poisson, const Polynomial& h, const Eigen::VectorXd& x0, double t,
                     std::size_t steps, double blowup_radius = kBlowUpRadius);

Trajectory integrate_field(const VectorField& field, const Eigen::VectorXd& x0, double t, std::size_t steps,
                           double blowup_radius = kBlowUpRadius);

/// Endpoint of the time-t flow using ceil(|t|/step) RK4 steps. Throws
/// NumericalError on blow-up.
Eigen::VectorXd flow_endpoint(const PoissonStructure& poisson, const Polynomial& h, const Eigen::VectorXd& x0,
                              double t, double step = kDefaultFlowStep);

struct RichardsonEstimate {
  Eigen::VectorXd endpoint;  // extrapolated
  double error_estimate = 0.0;  // |x_{h/2} - x_h| / 15
};

/// Runs `steps` and `2*steps` and combines them.
RichardsonEstimate richardson(const PoissonStructure& poisson, const Polynomial& h, const Eigen::VectorXd& x0,
                              double t, std::size_t steps);

/// max - min of f over the trajectory points.
double variation_along(const Polynomial& f, const Trajectory& trajectory);

/// zeta_{u,v,x}(s) = H_u(phi^s_v(x)) at each grid value, marching outward
/// from s = 0 in both directions.
std::vector<double> zeta_numeric(const WeaklyHamiltonianAction& action, const Vec& u, const Vec& v,
                                 const Eigen::VectorXd& x, const std::vector<double>& s_grid,
                                 double step = kDefaultFlowStep);

/// Coefficient functions of the expansion of zeta in powers s^j/j!:
///   a_0 = H_u,  a_j = H_{B^j u} + c(B^{j-1} u, v)  (j >= 1),  B(w) = [w, v].
struct ZetaCoefficientFunctions {
  std::vector<Polynomial> functions;  // a_0 .. a_jmax
  /// The ad-orbit of u reached zero within jmax, so every a_j beyond the
  /// list vanishes identically.
  bool truncated = false;
};

ZetaCoefficientFunctions zeta_coefficient_functions(const WeaklyHamiltonianAction& action, const Vec& u,
                                                    const Vec& v, std::size_t jmax);

struct ZetaSeries {
  std::vector<double> coeffs;
  bool truncated = false;

  /// sum_j coeffs[j] s^j / j!
  double evaluate(double s) const;
};

ZetaSeries zeta_series(const WeaklyHamiltonianAction& action, const Vec& u, const Vec& v, const Eigen::VectorXd& x,
                       std::size_t jmax);

struct ZetaComparison {
  std::vector<double> s;
  std::vector<double> numeric;
  std::vector<double> series;
  std::vector<double> abs_diff;
  double max_deviation = 0.0;
  /// False means the series is only a partial sum.
  bool truncated = false;
};

ZetaComparison compare_zeta(const WeaklyHamiltonianAction& action, const Vec& u, const Vec& v,
                            const Eigen::VectorXd& x, double s_min, double s_max, std::size_t samples,
                            std::size_t jmax = 8, double step = kDefaultFlowStep);

struct OrbitCheck {
  /// a_1 .. a_J as polynomials (index 0 holds a_1).
  std::vector<Polynomial> coefficient_functions;
  std::vector<double> initial_values;
  std::vector<double> variations;
  double hamiltonian_variation = 0.0;  // of H_u along the orbit
  bool truncated = false;
  bool blew_up = false;
};

/// Evaluates every expansion coefficient function along the orbit of X_v
/// through x0. On a periodic orbit zeta is bounded, so each of them must be
/// constant there.
OrbitCheck orbit_levelset_check(const WeaklyHamiltonianAction& action, const Vec& u, const Vec& v,
                                const Eigen::VectorXd& x0, double t, std::size_t steps, std::size_t jmax = 8);

}  // namespace weham

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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "weham/action.hpp"
#include "weham/polynomial.hpp"

namespace weham {

struct Tolerances {
  double coefficient = 1e-12;
  double rank = 1e-9;
  double flow = 1e-6;
  double finite_difference = 1e-4;
};

struct ScenarioDefaults {
  /// Framing of the split subspace V, one column per vector.
  std::optional<Eigen::MatrixXd> subspace;
  std::optional<Eigen::MatrixXd> inner_product;
  std::optional<Eigen::VectorXd> base_point;
  double step = 1e-3;
  Tolerances tolerances;
  /// Sampling box half-width.
  double box = 2.0;
  /// Random samples with |det C(y)| below this are rejected.
  double min_abs_det = 0.0;
};

/// One manifold, algebra and action, plus run defaults.
struct Scenario {
  std::string name;
  WeaklyHamiltonianAction action;
  std::vector<std::string> coordinates;
  ScenarioDefaults defaults;

  std::size_t manifold_dim() const { return action.nvars(); }
  Eigen::VectorXd base_point() const;
};

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t nvars, const std::string& where);

/// Throws InputError for malformed documents and ValidationError when the
/// algebra, the Poisson structure or the action fails its checks.
Scenario parse_scenario(const nlohmann::json& doc, const std::string& source = "<json>");
Scenario load_scenario(const std::string& path);
nlohmann::json scenario_to_json(const Scenario& scenario);

/// Built-in catalog. `spec` is a name with an optional parameter, e.g.
/// "galilean(2.5)", "a65a(-1)", "translations-r2n(3)".
Scenario builtin(const std::string& spec);
std::vector<std::string> builtin_names();

/// Heisenberg algebra X, Y, Z with [X, Y] = Z.
LieAlgebra heisenberg_algebra();
/// A_{6,5}^a: [e1,e3]=e5, [e1,e4]=e6, [e2,e3]=a e6, [e2,e4]=e5 (0-based in code).
LieAlgebra a65a_algebra(double a);

}  // namespace weham

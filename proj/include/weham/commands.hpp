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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "weham/scenario.hpp"

namespace weham {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
  kExitNumericalFailure = 3,
};

struct CommandOptions {
  std::optional<std::string> u;  // index, label, or comma-separated vector
  std::optional<std::string> v;
  std::optional<std::string> x;  // comma-separated point
  /// Comma-separated basis indices/labels, or explicit vectors separated by ';'.
  std::optional<std::string> subspace;
  double s_min = -5.0;
  double s_max = 5.0;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 42;
  std::optional<double> box;
  int degree = 2;
  std::size_t jmax = 8;
  double orbit_time = 10.0;
  std::size_t orbit_steps = 10000;
};

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
  /// (file name, contents)
  std::vector<std::pair<std::string, std::string>> csv_files;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "cocycle", "zeta", "split",
                                                 "residual", "orbit-check", "report"};
  return names;
}

/// Runs one command against a loaded scenario. Numerical failures are caught
/// and reported with exit code 3; malformed options throw InputError.
CommandResult run_command(const std::string& command, const Scenario& scenario, const CommandOptions& options);

/// Resolves an algebra vector argument: a basis index, a basis label, or
/// comma-separated coordinates.
Vec parse_algebra_vector(const std::string& text, const LieAlgebra& algebra);
Eigen::MatrixXd parse_subspace(const std::string& text, const LieAlgebra& algebra);
Eigen::VectorXd parse_point(const std::string& text, std::size_t dim);

}  // namespace weham

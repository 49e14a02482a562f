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

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "weham/commands.hpp"
#include "weham/errors.hpp"
#include "weham/scenario.hpp"

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw weham::InputError("cannot write " + path.string());
  out << contents;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weham: checks for weakly Hamiltonian Lie algebra actions"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all");

  weham::CommandOptions opt;
  std::string path;
  std::string builtin;
  std::string out_dir;
  std::string format = "json";
  std::size_t samples = 0;
  double box = 0.0;

  for (const auto& name : weham::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("scenario", path, "Scenario JSON file");
    sub->add_option("--builtin", builtin, "Built-in scenario, e.g. galilean(2.5)");
    sub->add_option("--subspace", opt.subspace, "Framing subspace: indices/labels, or ';'-separated vectors");
    sub->add_option("--u", opt.u, "Algebra element u");
    sub->add_option("--v", opt.v, "Algebra element v");
    sub->add_option("--x", opt.x, "Point, comma-separated");
    sub->add_option("--smin", opt.s_min, "Lower end of the zeta grid");
    sub->add_option("--smax", opt.s_max, "Upper end of the zeta grid");
    sub->add_option("--samples", samples, "Sample count");
    sub->add_option("--seed", opt.seed, "PRNG seed");
    sub->add_option("--box", box, "Half-width of the sampling box");
    sub->add_option("--deg", opt.degree, "Degree bound for the exactness search");
    sub->add_option("--jmax", opt.jmax, "Truncation order of the ad-orbit");
    sub->add_option("--T", opt.orbit_time, "Orbit integration time");
    sub->add_option("--steps", opt.orbit_steps, "Orbit integration steps");
    sub->add_option("--out", out_dir, "Directory for report.json and CSV files");
    sub->add_option("--format", format, "Output on stdout")->check(CLI::IsMember({"json", "csv"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : weham::kExitInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  if (samples > 0) opt.samples = samples;
  if (box > 0.0) opt.box = box;

  try {
    if (path.empty() == builtin.empty()) {
      throw weham::InputError("give exactly one of a scenario path or --builtin");
    }
    const weham::Scenario scenario = builtin.empty() ? weham::load_scenario(path) : weham::builtin(builtin);
    const weham::CommandResult result = weham::run_command(command, scenario, opt);

    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      write_file(std::filesystem::path(out_dir) / "report.json", result.report.dump(2) + "\n");
      for (const auto& [name, contents] : result.csv_files) write_file(std::filesystem::path(out_dir) / name, contents);
    }
    if (format == "csv") {
      for (const auto& [name, contents] : result.csv_files) std::cout << contents;
    } else {
      std::cout << result.report.dump(2) << "\n";
    }
    return result.exit_code;
  } catch (const weham::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return weham::kExitInputError;
  } catch (const weham::ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return weham::kExitCheckFailed;
  } catch (const weham::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return weham::kExitNumericalFailure;
  }
}

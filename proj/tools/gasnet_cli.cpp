// Copyright 2026 The gasnet Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: gasnet <solve|compare|levelset|simulate|kinetic|euler>.

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gasnet/app/commands.hpp"
#include "gasnet/errors.hpp"

namespace {

using gasnet::app::CommandOptions;
using gasnet::app::OutputFormat;

std::vector<double> parse_list(const std::string& text, const std::string& field) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(',', pos);
    const std::string item = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    try {
      std::size_t used = 0;
      const double x = std::stod(item, &used);
      if (used != item.size() || !std::isfinite(x)) throw std::invalid_argument(item);
      values.push_back(x);
    } catch (const std::exception&) {
      throw gasnet::InputError(field + ": '" + item + "' is not a number");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return values;
}

std::vector<double> parse_tuple(const std::string& text, const std::string& field, std::size_t n) {
  auto v = parse_list(text, field);
  if (v.size() != n) {
    throw gasnet::InputError(field + ": expected " + std::to_string(n) + " comma-separated numbers");
  }
  return v;
}

std::vector<double> parse_areas(const std::string& text) {
  auto areas = parse_list(text, "--areas");
  for (double a : areas) {
    if (!(a > 0.0)) throw gasnet::InputError("--areas: areas must be positive");
  }
  return areas;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isentropic gas flow on pipe networks: junction coupling solvers"};
  app.require_subcommand(1);

  CommandOptions opts;
  std::string coupling;
  std::string out_dir;
  std::string format = "csv";
  std::string problem;

  const auto add_common = [&](CLI::App* cmd, bool with_coupling) {
    cmd->add_option("problem", problem, "Problem file (JSON)")->required();
    if (with_coupling) cmd->add_option("--coupling", coupling, "Override the junction coupling");
    cmd->add_option("--out", out_dir, "Directory for result files");
    cmd->add_option("--format", format, "Result file format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--tol", opts.tol, "Tolerance for reference comparisons");
  };

  auto* solve = app.add_subcommand("solve", "Solve the junction Riemann problem");
  add_common(solve, true);
  auto* compare = app.add_subcommand("compare", "Solve with every coupling side by side");
  add_common(compare, false);
  auto* levelset = app.add_subcommand("levelset", "Sample coupling level sets");
  add_common(levelset, false);
  auto* simulate = app.add_subcommand("simulate", "Run the finite-volume network simulation");
  add_common(simulate, true);

  double kappa = 5.0;
  double gamma = 2.0;
  std::string areas_text = "1";
  std::vector<std::string> states;
  auto* kinetic = app.add_subcommand("kinetic", "Kinetic rho* for Maxwellian inflows");
  kinetic->add_option("--kappa", kappa, "Pressure coefficient");
  kinetic->add_option("--gamma", gamma, "Adiabatic exponent");
  kinetic->add_option("--areas", areas_text, "Comma-separated pipe areas");
  kinetic->add_option("--state", states, "Incoming state rho,momentum (one per pipe)")->required();

  std::vector<std::string> inflows;
  auto* euler = app.add_subcommand("euler", "Full-gas (rho*, theta*) for Gaussian inflows");
  euler->add_option("--areas", areas_text, "Comma-separated pipe areas");
  euler->add_option("--inflow", inflows, "Incoming Gaussian rho,u,theta (one per pipe)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gasnet::app::kInputError;
  }

  return gasnet::app::run_guarded(
      [&]() -> int {
        if (!coupling.empty()) opts.coupling = coupling;
        if (!out_dir.empty()) opts.out_dir = out_dir;
        opts.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
        if (!(opts.tol > 0.0)) throw gasnet::InputError("--tol: must be positive");
        if (solve->parsed()) return gasnet::app::cmd_solve(problem, opts, std::cout);
        if (compare->parsed()) return gasnet::app::cmd_compare(problem, opts, std::cout);
        if (levelset->parsed()) return gasnet::app::cmd_levelset(problem, opts, std::cout);
        if (simulate->parsed()) return gasnet::app::cmd_simulate(problem, opts, std::cout);
        const std::vector<double> areas = parse_areas(areas_text);
        if (kinetic->parsed()) {
          if (!(kappa > 0.0) || !(gamma > 1.0 && gamma < 3.0)) {
            throw gasnet::InputError("--kappa/--gamma: need kappa > 0 and 1 < gamma < 3");
          }
          std::vector<gasnet::State> parsed;
          for (const auto& s : states) {
            const auto v = parse_tuple(s, "--state", 2);
            if (v[0] < 0.0 || (v[0] == 0.0 && v[1] != 0.0)) {
              throw gasnet::InputError("--state: '" + s + "' is not a valid (rho, momentum)");
            }
            parsed.push_back(v[0] == 0.0 ? gasnet::State{} : gasnet::State{v[0], v[1] / v[0]});
          }
          return gasnet::app::cmd_kinetic(gasnet::GasLaw(kappa, gamma), areas, parsed, std::cout);
        }
        std::vector<gasnet::app::EulerInflowSpec> parsed;
        for (const auto& s : inflows) {
          const auto v = parse_tuple(s, "--inflow", 3);
          if (v[0] < 0.0 || !(v[2] > 0.0)) {
            throw gasnet::InputError("--inflow: '" + s + "' needs rho >= 0 and theta > 0");
          }
          parsed.push_back({v[0], v[1], v[2]});
        }
        return gasnet::app::cmd_euler(areas, parsed, std::cout);
      },
      std::cerr);
}

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

#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gasnet/gas_law.hpp"
#include "gasnet/junction.hpp"

namespace gasnet::app {

enum class OutputFormat { Csv, Json };

struct CommandOptions {
  std::optional<std::string> coupling;
  /// Directory for result files; nothing is written when absent.
  std::optional<std::string> out_dir;
  OutputFormat format = OutputFormat::Csv;
  /// Allowed deviation from embedded reference values.
  double tol = 2e-3;
};

/// Exit codes shared by all commands.
enum ExitCode : int { kOk = 0, kInputError = 1, kDomainError = 2, kInternalError = 3 };

/// Runs `body`, mapping library exceptions to exit codes and printing the
/// message to `err`.
int run_guarded(const std::function<int()>& body, std::ostream& err);

/// Formats with 10 significant digits.
std::string fmt(double x);

/// Reference traces (rho, rho u) for the bundled three-pipe instance, or
/// empty when `problem` is not that instance or the coupling has none.
std::vector<State> reference_traces(const JunctionProblem& problem, CouplingKind coupling);
std::vector<WaveKind> reference_wave_types(const JunctionProblem& problem, CouplingKind coupling);

int cmd_solve(const std::string& path, const CommandOptions& opts, std::ostream& out);
int cmd_compare(const std::string& path, const CommandOptions& opts, std::ostream& out);
int cmd_levelset(const std::string& path, const CommandOptions& opts, std::ostream& out);
int cmd_simulate(const std::string& path, const CommandOptions& opts, std::ostream& out);

/// Incoming Maxwellian traces of `states` on pipes with `areas`.
int cmd_kinetic(const GasLaw& law, const std::vector<double>& areas,
                const std::vector<State>& states, std::ostream& out);

struct EulerInflowSpec {
  double rho = 0.0;
  double u = 0.0;
  double theta = 1.0;
};

int cmd_euler(const std::vector<double>& areas, const std::vector<EulerInflowSpec>& inflows,
              std::ostream& out);

}  // namespace gasnet::app

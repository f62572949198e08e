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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gasnet/gas_law.hpp"
#include "gasnet/junction.hpp"

namespace gasnet::app {

struct SimulationSection {
  int cells = 400;
  double length = 1.0;
  double cfl = 0.5;
  double t_end = 0.05;
  double output_every = 0.0;
};

struct LevelsetSection {
  State base;
  std::vector<std::string> quantities;
  double rho_min = 0.05;
  double rho_max = 3.0;
  int samples = 200;
};

struct ProblemFile {
  GasLaw law{1.0, 2.0};
  std::optional<JunctionProblem> junction;
  std::optional<SimulationSection> simulation;
  std::optional<LevelsetSection> levelset;
};

/// Parses the JSON problem format. Throws InputError naming the offending
/// field, e.g. "junction.initial[1][0]".
ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::filesystem::path& path);

}  // namespace gasnet::app

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
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "gasnet/gas_law.hpp"
#include "gasnet/junction.hpp"

namespace gasnet {

/// One pipe discretised into equal cells; the junction sits at x = 0.
struct PipeGrid {
  double area = 1.0;
  double length = 1.0;
  /// Conserved averages (rho, rho u) per cell.
  std::vector<Eigen::Vector2d> cells;

  int size() const { return static_cast<int>(cells.size()); }
  double dx() const { return length / static_cast<double>(cells.size()); }
  double center(int i) const { return (i + 0.5) * dx(); }
  State state(int i) const;
};

struct SimConfig {
  double cfl = 0.5;
  double t_end = 0.1;
  /// Snapshot spacing in time; zero keeps only the initial and final states.
  double output_every = 0.0;
  bool monitor_mass = true;
  bool monitor_energy = true;
  bool monitor_invariants = true;

  /// Throws DomainError unless 0 < cfl <= 1, t_end >= 0, output_every >= 0.
  void validate() const;
};

struct Network {
  GasLaw law{1.0, 2.0};
  std::vector<PipeGrid> pipes;
  CouplingKind coupling = CouplingKind::ArtificialDensity;
  double time = 0.0;

  /// Piecewise constant data: pipe k filled with problem.initial[k].
  static Network from_problem(const JunctionProblem& problem, int cells, double length);
  /// Throws DomainError for fewer than 2 cells, a bad area or a cell outside D.
  void validate() const;
  /// Junction problem posed by the first cell of every pipe.
  JunctionProblem junction_problem() const;
};

/// Largest |lambda| over all cells.
double max_speed(const Network& net);
/// cfl * min dx / max_speed, including the junction fan speeds.
double stable_dt(const Network& net, double cfl);

struct JunctionRecord {
  double time = 0.0;
  std::optional<double> rho_star;
  std::vector<State> traces;
  double energy_flux_sum = 0.0;
};

struct StepInfo {
  JunctionRecord junction;
  /// sum A_k * (far-end mass flux) * dt.
  double far_mass_outflow = 0.0;
  /// sum A_k * (junction mass flux) * dt; zero up to the junction residual.
  double junction_mass_inflow = 0.0;
  /// sum A_k * G(far-end state) * dt.
  double far_energy_outflow = 0.0;
};

/// One Godunov step. Throws CFLViolation when dt exceeds
/// max_cfl * min dx / (largest wave speed, junction fans included).
Network step(const Network& net, double dt, StepInfo* info = nullptr, double max_cfl = 1.0);

struct MonitorReport {
  double omega1_min = 0.0;
  double omega2_max = 0.0;
  double total_mass = 0.0;
  double total_energy = 0.0;
};

MonitorReport monitors(const Network& net);

struct Snapshot {
  double time = 0.0;
  /// Per pipe, per cell (x, rho, u).
  std::vector<std::vector<Eigen::Vector3d>> cells;
};

struct SimulationResult {
  Network final_state;
  std::vector<JunctionRecord> junction_log;
  std::vector<Snapshot> snapshots;
  int steps = 0;
  MonitorReport initial;
  /// Worst excursion of the Riemann invariants past their initial range.
  double invariant_excess = 0.0;
  /// Largest |mass change + far-end mass outflow| over any single step,
  /// relative to the total mass.
  double max_mass_defect = 0.0;
  /// Largest increase of energy plus cumulative far-end outflow in a step.
  double max_energy_increase = 0.0;
  /// Energy plus cumulative far-end energy outflow, after each step.
  std::vector<double> energy_budget;
};

Snapshot take_snapshot(const Network& net);

SimulationResult simulate(const Network& initial, const SimConfig& config);

}  // namespace gasnet

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

#include "gasnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gasnet/errors.hpp"
#include "gasnet/wave_curves.hpp"

namespace gasnet {
namespace {

// Relative density below which a cell is treated as vacuum.
constexpr double kVacuumDensity = 1e-13;

Eigen::Vector2d interface_flux(const GasLaw& law, const State& left, const State& right) {
  if (left == right) return flux(law, left);
  return flux(law, sample(solve_riemann(law, left, right), 0.0));
}

double fan_speed(const JunctionSolution& sol) {
  double speed = 0.0;
  for (const auto& fan : sol.fans) {
    for (const auto* w : {&fan.wave1, &fan.wave2}) {
      if (w->kind == WaveKind::None) continue;
      speed = std::max({speed, std::abs(w->speed_lo), std::abs(w->speed_hi)});
    }
  }
  return speed;
}

double min_dx(const Network& net) {
  double dx = std::numeric_limits<double>::infinity();
  for (const auto& p : net.pipes) dx = std::min(dx, p.dx());
  return dx;
}

}  // namespace

State PipeGrid::state(int i) const {
  const Eigen::Vector2d& c = cells[static_cast<std::size_t>(i)];
  if (!(c(0) > kVacuumDensity)) {
    if (c(0) < -kVacuumDensity || !std::isfinite(c(0))) {
      throw ConsistencyError("cell " + std::to_string(i) + " has negative density");
    }
    return {0.0, 0.0};
  }
  return {c(0), c(1) / c(0)};
}

void SimConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw DomainError("cfl must lie in (0, 1]");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw DomainError("t_end must be non-negative");
  if (!(output_every >= 0.0)) throw DomainError("output_every must be non-negative");
}

Network Network::from_problem(const JunctionProblem& problem, int cells, double length) {
  problem.validate();
  if (cells < 2) throw DomainError("a pipe needs at least 2 cells");
  if (!(length > 0.0)) throw DomainError("pipe length must be positive");
  Network net;
  net.law = problem.law;
  net.coupling = problem.coupling;
  for (std::size_t k = 0; k < problem.areas.size(); ++k) {
    PipeGrid pipe;
    pipe.area = problem.areas[k];
    pipe.length = length;
    pipe.cells.assign(static_cast<std::size_t>(cells), problem.initial[k].conserved());
    net.pipes.push_back(std::move(pipe));
  }
  return net;
}

void Network::validate() const {
  if (pipes.empty()) throw DomainError("network needs at least one pipe");
  for (std::size_t k = 0; k < pipes.size(); ++k) {
    const auto& p = pipes[k];
    if (p.size() < 2) throw DomainError("pipe " + std::to_string(k + 1) + " has fewer than 2 cells");
    if (!(p.area > 0.0) || !(p.length > 0.0)) {
      throw DomainError("pipe " + std::to_string(k + 1) + " needs positive area and length");
    }
    for (int i = 0; i < p.size(); ++i) {
      const Eigen::Vector2d& c = p.cells[static_cast<std::size_t>(i)];
      if (!(c(0) >= 0.0) || !std::isfinite(c(0)) || !std::isfinite(c(1))) {
        throw DomainError("pipe " + std::to_string(k + 1) + " cell " + std::to_string(i) +
                          " is not an admissible state");
      }
    }
  }
}

JunctionProblem Network::junction_problem() const {
  JunctionProblem jp;
  jp.law = law;
  jp.coupling = coupling;
  for (const auto& p : pipes) {
    jp.areas.push_back(p.area);
    jp.initial.push_back(p.state(0));
  }
  return jp;
}

double max_speed(const Network& net) {
  double speed = 0.0;
  for (const auto& p : net.pipes) {
    for (int i = 0; i < p.size(); ++i) {
      const auto ev = eigenvalues(net.law, p.state(i));
      speed = std::max({speed, std::abs(ev.lambda1), std::abs(ev.lambda2)});
    }
  }
  return speed;
}

double stable_dt(const Network& net, double cfl) {
  const JunctionSolution sol = solve_junction(net.junction_problem());
  const double speed = std::max(max_speed(net), fan_speed(sol));
  if (speed == 0.0) return std::numeric_limits<double>::infinity();
  return cfl * min_dx(net) / speed;
}

Network step(const Network& net, double dt, StepInfo* info, double max_cfl) {
  if (!(dt >= 0.0)) throw DomainError("time step must be non-negative");
  const JunctionSolution sol = solve_junction(net.junction_problem());
  const double speed = std::max(max_speed(net), fan_speed(sol));
  if (dt * speed > max_cfl * min_dx(net) * (1.0 + 1e-12)) {
    throw CFLViolation("time step " + std::to_string(dt) + " exceeds the CFL bound " +
                       std::to_string(max_cfl * min_dx(net) / speed));
  }
  Network next = net;
  next.time = net.time + dt;
  StepInfo local;
  local.junction = {net.time, sol.rho_star, sol.traces, sol.energy_flux_sum};
  for (std::size_t k = 0; k < net.pipes.size(); ++k) {
    const PipeGrid& pipe = net.pipes[k];
    const int n = pipe.size();
    std::vector<Eigen::Vector2d> fluxes(static_cast<std::size_t>(n + 1));
    std::vector<State> states(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) states[static_cast<std::size_t>(i)] = pipe.state(i);
    fluxes[0] = flux(net.law, sol.traces[k]);
    for (int i = 1; i < n; ++i) {
      const auto j = static_cast<std::size_t>(i);
      fluxes[j] = interface_flux(net.law, states[j - 1], states[j]);
    }
    const State& last = states.back();
    fluxes.back() = flux(net.law, last);
    const double ratio = dt / pipe.dx();
    auto& cells = next.pipes[k].cells;
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] -= ratio * (fluxes[i + 1] - fluxes[i]);
    local.junction_mass_inflow += pipe.area * fluxes[0](0) * dt;
    local.far_mass_outflow += pipe.area * fluxes.back()(0) * dt;
    local.far_energy_outflow += pipe.area * energy_pair(net.law, last).flux * dt;
  }
  if (info) *info = std::move(local);
  return next;
}

MonitorReport monitors(const Network& net) {
  MonitorReport r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                  0.0, 0.0};
  for (const auto& p : net.pipes) {
    const double weight = p.area * p.dx();
    for (int i = 0; i < p.size(); ++i) {
      const State s = p.state(i);
      r.total_mass += weight * p.cells[static_cast<std::size_t>(i)](0);
      r.total_energy += weight * energy_pair(net.law, s).eta;
      if (s.is_vacuum()) continue;
      const auto inv = riemann_invariants(net.law, s);
      r.omega1_min = std::min(r.omega1_min, inv.omega1);
      r.omega2_max = std::max(r.omega2_max, inv.omega2);
    }
  }
  if (!std::isfinite(r.omega1_min)) r.omega1_min = r.omega2_max = 0.0;
  return r;
}

Snapshot take_snapshot(const Network& net) {
  Snapshot snap;
  snap.time = net.time;
  for (const auto& p : net.pipes) {
    std::vector<Eigen::Vector3d> rows;
    rows.reserve(p.cells.size());
    for (int i = 0; i < p.size(); ++i) {
      const State s = p.state(i);
      rows.emplace_back(p.center(i), s.rho, s.u);
    }
    snap.cells.push_back(std::move(rows));
  }
  return snap;
}

SimulationResult simulate(const Network& initial, const SimConfig& config) {
  config.validate();
  initial.validate();
  SimulationResult out{initial, {}, {}, 0, monitors(initial), 0.0, 0.0, 0.0, {}};
  Network& net = out.final_state;
  out.snapshots.push_back(take_snapshot(net));
  double budget = out.initial.total_energy;
  double far_energy = 0.0;
  out.energy_budget.push_back(budget);
  double next_output = config.output_every > 0.0 ? net.time + config.output_every
                                                 : std::numeric_limits<double>::infinity();
  const double t_end = initial.time + config.t_end;
  MonitorReport current = out.initial;
  while (net.time < t_end) {
    double dt = std::min(stable_dt(net, config.cfl), t_end - net.time);
    bool snapshot_now = false;
    if (net.time + dt >= next_output) {
      dt = next_output - net.time;
      snapshot_now = true;
    }
    StepInfo info;
    net = step(net, dt, &info);
    ++out.steps;
    out.junction_log.push_back(info.junction);
    const MonitorReport after = monitors(net);
    if (config.monitor_mass) {
      const double defect = std::abs(after.total_mass - current.total_mass + info.far_mass_outflow);
      out.max_mass_defect =
          std::max(out.max_mass_defect, defect / std::max(1.0, current.total_mass));
    }
    if (config.monitor_energy) {
      far_energy += info.far_energy_outflow;
      const double next_budget = after.total_energy + far_energy;
      out.max_energy_increase = std::max(out.max_energy_increase, next_budget - budget);
      budget = next_budget;
      out.energy_budget.push_back(budget);
    }
    if (config.monitor_invariants) {
      out.invariant_excess = std::max({out.invariant_excess, out.initial.omega1_min - after.omega1_min,
                                       after.omega2_max - out.initial.omega2_max});
    }
    current = after;
    if (snapshot_now) {
      out.snapshots.push_back(take_snapshot(net));
      next_output += config.output_every;
    }
  }
  if (out.snapshots.back().time != net.time) out.snapshots.push_back(take_snapshot(net));
  return out;
}

}  // namespace gasnet

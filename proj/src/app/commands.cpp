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

#include "gasnet/app/commands.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "gasnet/app/levelset.hpp"
#include "gasnet/app/problem_file.hpp"
#include "gasnet/errors.hpp"
#include "gasnet/euler_junction.hpp"
#include "gasnet/kinetic.hpp"
#include "gasnet/network.hpp"

namespace gasnet::app {
namespace {

using nlohmann::json;

bool is_reference_instance(const JunctionProblem& p) {
  if (p.law.kappa() != 5.0 || p.law.gamma() != 2.0 || p.areas.size() != 3) return false;
  const std::array<std::array<double, 2>, 3> data{{{1.0, -1.0}, {1.0, 0.5}, {1.0, 0.5}}};
  for (std::size_t k = 0; k < 3; ++k) {
    if (p.areas[k] != 1.0) return false;
    if (std::abs(p.initial[k].rho - data[k][0]) > 1e-12) return false;
    if (std::abs(p.initial[k].momentum() - data[k][1]) > 1e-12) return false;
  }
  return true;
}

State from_pair(double rho, double mom) { return {rho, mom / rho}; }

const JunctionProblem& require_junction(const ProblemFile& file) {
  if (!file.junction) throw InputError("junction: missing section");
  return *file.junction;
}

JunctionProblem with_coupling(JunctionProblem p, const CommandOptions& opts) {
  if (opts.coupling) {
    const auto kind = coupling_from_string(*opts.coupling);
    if (!kind) throw InputError("--coupling: unknown coupling '" + *opts.coupling + "'");
    p.coupling = *kind;
  }
  return p;
}

std::filesystem::path output_dir(const CommandOptions& opts) {
  std::filesystem::path dir(*opts.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("--out: cannot create directory '" + dir.string() + "'");
  return dir;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw InputError("--out: cannot write '" + path.string() + "'");
  return f;
}

json trace_json(const State& s) { return json::array({s.rho, s.momentum()}); }

json solution_json(const JunctionProblem& p, const JunctionSolution& sol) {
  json j;
  j["coupling"] = to_string(sol.coupling);
  j["rho_star"] = sol.rho_star ? json(*sol.rho_star) : json(nullptr);
  j["traces"] = json::array();
  j["wave_types"] = json::array();
  for (std::size_t k = 0; k < sol.traces.size(); ++k) {
    j["traces"].push_back(trace_json(sol.traces[k]));
    j["wave_types"].push_back(to_string(sol.wave_types[k]));
  }
  j["energy_flux_sum"] = sol.energy_flux_sum;
  j["mass_residual"] = sol.mass_residual;
  j["plateau"] = sol.plateau;
  j["pipes"] = p.areas.size();
  return j;
}

// Prints the solution table and, for the bundled instance, the deviations
// from the reference traces. Returns the largest deviation (0 without
// reference data).
double print_solution(std::ostream& out, const JunctionProblem& p, const JunctionSolution& sol,
                      double tol) {
  out << "coupling: " << to_string(sol.coupling) << "\n";
  if (sol.rho_star) out << "rho_star: " << fmt(*sol.rho_star) << (sol.plateau ? " (plateau)" : "") << "\n";
  out << "pipe  rho  momentum  wave";
  if (!sol.boundary.empty()) out << "  region  regime";
  out << "\n";
  for (std::size_t k = 0; k < sol.traces.size(); ++k) {
    out << k + 1 << "  " << fmt(sol.traces[k].rho) << "  " << fmt(sol.traces[k].momentum()) << "  "
        << to_string(sol.wave_types[k]);
    if (!sol.boundary.empty()) {
      out << "  " << to_string(sol.boundary[k].region) << "  " << to_string(sol.boundary[k].regime);
    }
    out << "\n";
  }
  out << "energy_flux_sum: " << fmt(sol.energy_flux_sum) << "\n";
  out << "mass_residual: " << fmt(sol.mass_residual) << "\n";
  const auto ref = reference_traces(p, sol.coupling);
  if (ref.empty()) return 0.0;
  double worst = 0.0;
  out << "reference  rho  momentum  delta_rho  delta_momentum\n";
  for (std::size_t k = 0; k < ref.size(); ++k) {
    const double dr = sol.traces[k].rho - ref[k].rho;
    const double dm = sol.traces[k].momentum() - ref[k].momentum();
    worst = std::max({worst, std::abs(dr), std::abs(dm)});
    out << k + 1 << "  " << fmt(ref[k].rho) << "  " << fmt(ref[k].momentum()) << "  " << fmt(dr)
        << "  " << fmt(dm) << "\n";
  }
  const auto waves = reference_wave_types(p, sol.coupling);
  bool waves_ok = waves.size() == sol.wave_types.size();
  for (std::size_t k = 0; waves_ok && k < waves.size(); ++k) waves_ok = waves[k] == sol.wave_types[k];
  out << "reference traces: " << (worst <= tol ? "match" : "MISMATCH") << " (max delta "
      << fmt(worst) << ", tol " << fmt(tol) << ")\n";
  out << "reference wave types: " << (waves_ok ? "match" : "MISMATCH") << "\n";
  return worst;
}

}  // namespace

std::string fmt(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "solver domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

std::vector<State> reference_traces(const JunctionProblem& problem, CouplingKind coupling) {
  if (!is_reference_instance(problem)) return {};
  switch (coupling) {
    case CouplingKind::ArtificialDensity:
      return {from_pair(1.1776, -0.5417), from_pair(0.9346, 0.2708), from_pair(0.9346, 0.2708)};
    case CouplingKind::EqualPressure:
      return {from_pair(1.0, -1.0), from_pair(1.0, 0.5), from_pair(1.0, 0.5)};
    case CouplingKind::EqualMomentumFlux:
      return {from_pair(0.8964, -1.1981), from_pair(1.0266, 0.5991), from_pair(1.0266, 0.5991)};
    case CouplingKind::EqualBernoulli:
      return {from_pair(0.8518, -1.2670), from_pair(1.0356, 0.6335), from_pair(1.0356, 0.6335)};
    case CouplingKind::EqualStagnationEnthalpy:
      break;
  }
  return {};
}

std::vector<WaveKind> reference_wave_types(const JunctionProblem& problem, CouplingKind coupling) {
  if (!is_reference_instance(problem)) return {};
  const auto R = WaveKind::Rarefaction;
  const auto S = WaveKind::Shock;
  const auto N = WaveKind::None;
  switch (coupling) {
    case CouplingKind::ArtificialDensity:
      return {S, R, R};
    case CouplingKind::EqualPressure:
      return {N, N, N};
    case CouplingKind::EqualMomentumFlux:
    case CouplingKind::EqualBernoulli:
      return {R, S, S};
    case CouplingKind::EqualStagnationEnthalpy:
      break;
  }
  return {};
}

int cmd_solve(const std::string& path, const CommandOptions& opts, std::ostream& out) {
  const ProblemFile file = load_problem(path);
  const JunctionProblem p = with_coupling(require_junction(file), opts);
  const JunctionSolution sol = solve_junction(p);
  print_solution(out, p, sol, opts.tol);
  if (opts.out_dir) {
    const auto dir = output_dir(opts);
    if (opts.format == OutputFormat::Json) {
      open_output(dir / "solve.json") << solution_json(p, sol).dump(2) << "\n";
    } else {
      auto f = open_output(dir / "solve.csv");
      f << "pipe,rho,momentum,velocity,wave_type\n";
      for (std::size_t k = 0; k < sol.traces.size(); ++k) {
        f << k + 1 << "," << fmt(sol.traces[k].rho) << "," << fmt(sol.traces[k].momentum()) << ","
          << fmt(sol.traces[k].u) << "," << to_string(sol.wave_types[k]) << "\n";
      }
      auto g = open_output(dir / "solve_summary.csv");
      g << "key,value\n";
      g << "coupling," << to_string(sol.coupling) << "\n";
      g << "rho_star," << (sol.rho_star ? fmt(*sol.rho_star) : std::string()) << "\n";
      g << "energy_flux_sum," << fmt(sol.energy_flux_sum) << "\n";
      g << "mass_residual," << fmt(sol.mass_residual) << "\n";
    }
  }
  return kOk;
}

int cmd_compare(const std::string& path, const CommandOptions& opts, std::ostream& out) {
  const ProblemFile file = load_problem(path);
  const JunctionProblem base = require_junction(file);
  std::vector<CouplingKind> kinds = standard_couplings();
  kinds.push_back(CouplingKind::EqualStagnationEnthalpy);

  json report = json::array();
  std::vector<std::array<std::string, 4>> csv_rows;
  std::optional<CouplingKind> most_dissipative;
  double lowest = std::numeric_limits<double>::infinity();
  for (const CouplingKind kind : kinds) {
    JunctionProblem p = base;
    p.coupling = kind;
    out << "== " << to_string(kind) << "\n";
    try {
      const JunctionSolution sol = solve_junction(p);
      print_solution(out, p, sol, opts.tol);
      report.push_back(solution_json(p, sol));
      for (std::size_t k = 0; k < sol.traces.size(); ++k) {
        csv_rows.push_back({to_string(kind), std::to_string(k + 1),
                            fmt(sol.traces[k].rho) + "," + fmt(sol.traces[k].momentum()),
                            to_string(sol.wave_types[k])});
      }
      if (kind != CouplingKind::EqualStagnationEnthalpy && sol.energy_flux_sum < lowest) {
        lowest = sol.energy_flux_sum;
        most_dissipative = kind;
      }
    } catch (const DomainError& e) {
      out << "failed: " << e.what() << "\n";
      report.push_back({{"coupling", to_string(kind)}, {"error", e.what()}});
    }
  }
  out << "== summary\n";
  if (most_dissipative) {
    out << "most dissipative: " << to_string(*most_dissipative) << " (energy_flux_sum "
        << fmt(lowest) << ")\n";
  }
  if (opts.out_dir) {
    const auto dir = output_dir(opts);
    if (opts.format == OutputFormat::Json) {
      open_output(dir / "compare.json") << report.dump(2) << "\n";
    } else {
      auto f = open_output(dir / "compare.csv");
      f << "coupling,pipe,rho,momentum,wave_type\n";
      for (const auto& r : csv_rows) f << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << "\n";
    }
  }
  return kOk;
}

int cmd_levelset(const std::string& path, const CommandOptions& opts, std::ostream& out) {
  const ProblemFile file = load_problem(path);
  if (!file.levelset) throw InputError("levelset: missing section");
  const LevelsetSection& ls = *file.levelset;
  std::vector<LevelCurve> curves;
  for (const auto& q : ls.quantities) {
    curves.push_back(level_curve(file.law, ls.base, q, ls.rho_min, ls.rho_max, ls.samples));
  }
  const auto write_csv = [&](std::ostream& f) {
    f << "quantity,branch,rho,momentum\n";
    for (const auto& c : curves) {
      for (const auto& p : c.upper) f << c.quantity << ",upper," << fmt(p(0)) << "," << fmt(p(1)) << "\n";
      for (const auto& p : c.lower) f << c.quantity << ",lower," << fmt(p(0)) << "," << fmt(p(1)) << "\n";
    }
  };
  const auto write_json = [&](std::ostream& f) {
    json j = json::array();
    for (const auto& c : curves) {
      json e{{"quantity", c.quantity}, {"bounded", c.bounded}};
      e["turning_rho"] = c.turning_rho ? json(*c.turning_rho) : json(nullptr);
      e["upper"] = json::array();
      e["lower"] = json::array();
      for (const auto& p : c.upper) e["upper"].push_back({p(0), p(1)});
      for (const auto& p : c.lower) e["lower"].push_back({p(0), p(1)});
      j.push_back(e);
    }
    f << j.dump(2) << "\n";
  };
  if (opts.out_dir) {
    const auto dir = output_dir(opts);
    if (opts.format == OutputFormat::Json) {
      auto f = open_output(dir / "levelset.json");
      write_json(f);
    } else {
      auto f = open_output(dir / "levelset.csv");
      write_csv(f);
    }
    for (const auto& c : curves) {
      out << c.quantity << ": " << c.upper.size() + c.lower.size() << " points, "
          << (c.bounded ? "bounded" : "unbounded") << "\n";
    }
  } else if (opts.format == OutputFormat::Json) {
    write_json(out);
  } else {
    write_csv(out);
  }
  return kOk;
}

int cmd_simulate(const std::string& path, const CommandOptions& opts, std::ostream& out) {
  const ProblemFile file = load_problem(path);
  const JunctionProblem p = with_coupling(require_junction(file), opts);
  if (!file.simulation) throw InputError("simulation: missing section");
  const SimulationSection& s = *file.simulation;
  SimConfig cfg;
  cfg.cfl = s.cfl;
  cfg.t_end = s.t_end;
  cfg.output_every = s.output_every;
  const Network net = Network::from_problem(p, s.cells, s.length);
  const SimulationResult res = simulate(net, cfg);

  out << "coupling: " << to_string(p.coupling) << "\n";
  out << "steps: " << res.steps << "\n";
  out << "final_time: " << fmt(res.final_state.time) << "\n";
  if (!res.junction_log.empty() && res.junction_log.front().rho_star) {
    out << "rho_star first/last: " << fmt(*res.junction_log.front().rho_star) << " / "
        << fmt(*res.junction_log.back().rho_star) << "\n";
  }
  out << "max_mass_defect_per_step: " << fmt(res.max_mass_defect) << "\n";
  out << "max_energy_increase_per_step: " << fmt(res.max_energy_increase) << "\n";
  out << "energy_nonincreasing: " << (res.max_energy_increase <= 1e-12 ? "yes" : "no") << "\n";
  out << "invariant_excess: " << fmt(res.invariant_excess) << "\n";

  if (opts.out_dir) {
    const auto dir = output_dir(opts);
    if (opts.format == OutputFormat::Json) {
      json j;
      j["snapshots"] = json::array();
      for (const auto& snap : res.snapshots) {
        json sj{{"t", snap.time}, {"pipes", json::array()}};
        for (const auto& pipe : snap.cells) {
          json rows = json::array();
          for (const auto& c : pipe) rows.push_back({c(0), c(1), c(2)});
          sj["pipes"].push_back(rows);
        }
        j["snapshots"].push_back(sj);
      }
      j["junction_log"] = json::array();
      for (const auto& r : res.junction_log) {
        json rj{{"t", r.time}, {"energy_flux_sum", r.energy_flux_sum}};
        rj["rho_star"] = r.rho_star ? json(*r.rho_star) : json(nullptr);
        rj["traces"] = json::array();
        for (const auto& t : r.traces) rj["traces"].push_back(trace_json(t));
        j["junction_log"].push_back(rj);
      }
      open_output(dir / "simulate.json") << j.dump(1) << "\n";
    } else {
      auto f = open_output(dir / "snapshots.csv");
      f << "t,pipe,x,rho,u\n";
      for (const auto& snap : res.snapshots) {
        for (std::size_t k = 0; k < snap.cells.size(); ++k) {
          for (const auto& c : snap.cells[k]) {
            f << fmt(snap.time) << "," << k + 1 << "," << fmt(c(0)) << "," << fmt(c(1)) << ","
              << fmt(c(2)) << "\n";
          }
        }
      }
      auto g = open_output(dir / "junction_log.csv");
      g << "t,rho_star";
      for (std::size_t k = 0; k < p.areas.size(); ++k) g << ",rho_" << k + 1 << ",momentum_" << k + 1;
      g << ",energy_flux_sum\n";
      for (const auto& r : res.junction_log) {
        g << fmt(r.time) << "," << (r.rho_star ? fmt(*r.rho_star) : std::string());
        for (const auto& t : r.traces) g << "," << fmt(t.rho) << "," << fmt(t.momentum());
        g << "," << fmt(r.energy_flux_sum) << "\n";
      }
    }
  }
  return kOk;
}

int cmd_kinetic(const GasLaw& law, const std::vector<double>& areas,
                const std::vector<State>& states, std::ostream& out) {
  if (areas.size() != states.size() || areas.empty()) {
    throw InputError("--state: expected one state per area");
  }
  std::vector<HalfDistribution> incoming;
  double inflow = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    incoming.push_back(HalfDistribution::maxwellian_trace(states[k], Side::Incoming));
    inflow -= areas[k] * mass_flux(law, incoming.back());
  }
  const double rho_star = kinetic_rho_star(law, areas, incoming);
  out << "incoming_mass_flux: " << fmt(inflow) << "\n";
  out << "rho_star: " << fmt(rho_star) << "\n";
  out << "outgoing_half_flux: " << fmt(half_flux(law, rho_star)) << "\n";
  return kOk;
}

int cmd_euler(const std::vector<double>& areas, const std::vector<EulerInflowSpec>& inflows,
              std::ostream& out) {
  if (areas.size() != inflows.size() || areas.empty()) {
    throw InputError("--inflow: expected one inflow per area");
  }
  std::vector<EulerInflow> incoming;
  for (const auto& f : inflows) incoming.push_back({{{f.rho, f.u, f.theta}}});
  const EulerJunctionResult r = solve_euler_junction(areas, incoming);
  out << "rho_star: " << fmt(r.rho_star) << "\n";
  out << "theta_star: " << (r.theta_star ? fmt(*r.theta_star) : std::string("none")) << "\n";
  out << "mass_residual: " << fmt(r.mass_residual) << "\n";
  out << "energy_residual: " << fmt(r.energy_residual) << "\n";
  out << "entropy_flux_sum: " << fmt(r.entropy_flux_sum) << "\n";
  return kOk;
}

}  // namespace gasnet::app

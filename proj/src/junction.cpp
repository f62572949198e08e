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

#include "gasnet/junction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>

#include "gasnet/errors.hpp"
#include "gasnet/roots.hpp"

namespace gasnet {
namespace {

constexpr int kMaxNewtonIterations = 100;
constexpr int kMaxHalvings = 60;

WaveKind wave_kind(const State& trace, const State& initial) {
  if (trace == initial) return WaveKind::None;
  if (trace.rho < initial.rho) return WaveKind::Rarefaction;
  if (trace.rho > initial.rho) return WaveKind::Shock;
  return WaveKind::None;
}

double coupling_quantity(const GasLaw& law, CouplingKind kind, const State& s) {
  switch (kind) {
    case CouplingKind::EqualPressure:
      return pressure(law, s);
    case CouplingKind::EqualMomentumFlux:
      return momentum_flux(law, s);
    case CouplingKind::EqualBernoulli:
      return bernoulli(law, s);
    case CouplingKind::EqualStagnationEnthalpy:
      return enthalpy(law, s);
    case CouplingKind::ArtificialDensity:
      break;
  }
  throw DomainError("artificial density is not an equalisation coupling");
}

void fill_common(const JunctionProblem& problem, JunctionSolution& sol) {
  const GasLaw& law = problem.law;
  const std::size_t d = problem.areas.size();
  sol.fans.clear();
  sol.wave_types.clear();
  sol.mass_residual = 0.0;
  sol.energy_flux_sum = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const State& trace = sol.traces[k];
    sol.fans.push_back(solve_riemann(law, trace, problem.initial[k]));
    sol.wave_types.push_back(wave_kind(trace, problem.initial[k]));
    sol.mass_residual += problem.areas[k] * trace.momentum();
    sol.energy_flux_sum += problem.areas[k] * energy_pair(law, trace).flux;
  }
}

// Traces for the artificial density rho_tilde.
std::vector<BoundaryTrace> traces_for(const JunctionProblem& problem, double rho_tilde) {
  std::vector<BoundaryTrace> out;
  out.reserve(problem.initial.size());
  for (const State& s : problem.initial) out.push_back(boundary_trace(problem.law, s, rho_tilde));
  return out;
}

JunctionSolution solve_artificial_density(const JunctionProblem& problem) {
  JunctionSolution sol;
  sol.coupling = CouplingKind::ArtificialDensity;
  const bool all_vacuum = std::all_of(problem.initial.begin(), problem.initial.end(),
                                      [](const State& s) { return s.is_vacuum(); });
  double rho_star = 0.0;
  if (!all_vacuum) {
    const Bracket br = bracket(problem);
    const auto m = [&](double r) { return mass_production(problem, r); };
    double lo = br.rho_minus;
    double hi = br.rho_plus;
    double m_lo = m(lo);
    double m_hi = m(hi);
    for (int i = 0; m_hi < 0.0; ++i) {
      if (i > 200) throw NoConvergence("mass production stays negative");
      lo = hi;
      m_lo = m_hi;
      hi = 2.0 * hi + 1.0;
      m_hi = m(hi);
    }
    int evaluations = 0;
    const auto counted = [&](double r) {
      ++evaluations;
      return m(r);
    };
    rho_star = m_lo >= 0.0 ? lo : brent_root(counted, lo, hi, m_lo, m_hi);
    sol.iterations = evaluations;

    // A flat stretch of m around the root: move to its left end.
    const double flat_tol = 1e-14 * problem.mass_scale();
    const double probe = rho_star - 1e-6 * (1.0 + rho_star);
    if (probe > lo && std::abs(m(rho_star)) <= flat_tol && std::abs(m(probe)) <= flat_tol) {
      double a = lo;
      double b = probe;
      for (int i = 0; i < 200 && b - a > 4.0 * std::numeric_limits<double>::epsilon() * b; ++i) {
        const double mid = 0.5 * (a + b);
        (std::abs(m(mid)) <= flat_tol ? b : a) = mid;
      }
      rho_star = b;
      sol.plateau = true;
    }
  }
  sol.rho_star = rho_star;
  sol.boundary = traces_for(problem, rho_star);
  for (const auto& bt : sol.boundary) sol.traces.push_back(bt.trace);
  fill_common(problem, sol);
  return sol;
}

bool strictly_subsonic(const GasLaw& law, const State& s) {
  return s.rho > 0.0 && classify(law, s) == SonicClass::Subsonic;
}

JunctionSolution solve_equalisation(const JunctionProblem& problem) {
  const GasLaw& law = problem.law;
  const CouplingKind kind = problem.coupling;
  const std::size_t d = problem.areas.size();
  const auto n = static_cast<Eigen::Index>(d);
  for (const State& s : problem.initial) {
    if (s.is_vacuum()) throw NoSubsonicSolution("rival couplings need non-vacuum pipes");
  }

  const auto states_at = [&](const Eigen::VectorXd& rho) {
    std::vector<State> out(d);
    for (std::size_t k = 0; k < d; ++k) {
      const auto i = static_cast<Eigen::Index>(k);
      out[k] = {rho(i), reversed_curve(law, 2, problem.initial[k], rho(i))};
    }
    return out;
  };
  const double scale = problem.mass_scale();
  const auto residual = [&](const Eigen::VectorXd& rho) {
    const auto states = states_at(rho);
    Eigen::VectorXd f(n);
    double mass = 0.0;
    for (std::size_t k = 0; k < d; ++k) mass += problem.areas[k] * states[k].momentum();
    f(0) = mass / scale;
    for (std::size_t k = 1; k < d; ++k) {
      const double qa = coupling_quantity(law, kind, states[k - 1]);
      const double qb = coupling_quantity(law, kind, states[k]);
      f(static_cast<Eigen::Index>(k)) = (qa - qb) / std::max({1.0, std::abs(qa), std::abs(qb)});
    }
    return f;
  };
  const auto admissible = [&](const Eigen::VectorXd& rho) {
    if (!(rho.array() > 0.0).all() || !rho.allFinite()) return false;
    const auto states = states_at(rho);
    return std::all_of(states.begin(), states.end(),
                       [&](const State& s) { return strictly_subsonic(law, s); });
  };

  Eigen::VectorXd rho(n);
  for (std::size_t k = 0; k < d; ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    rho(i) = strictly_subsonic(law, problem.initial[k])
                 ? problem.initial[k].rho
                 : zero_velocity_density(law, problem.initial[k]);
  }
  if (!admissible(rho)) throw NoSubsonicSolution("no subsonic starting point");

  Eigen::VectorXd f = residual(rho);
  int iteration = 0;
  for (; iteration < kMaxNewtonIterations; ++iteration) {
    if (f.lpNorm<Eigen::Infinity>() <= 1e-14) break;
    Eigen::MatrixXd jac(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double h = 1e-7 * rho(j);
      Eigen::VectorXd plus = rho;
      Eigen::VectorXd minus = rho;
      plus(j) += h;
      minus(j) -= h;
      jac.col(j) = (residual(plus) - residual(minus)) / (2.0 * h);
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(jac);
    const Eigen::VectorXd step = lu.solve(-f);
    if (!step.allFinite()) throw NoSubsonicSolution("singular Newton system");

    double t = 1.0;
    bool accepted = false;
    for (int h = 0; h < kMaxHalvings; ++h, t *= 0.5) {
      const Eigen::VectorXd trial = rho + t * step;
      if (!admissible(trial)) continue;
      const Eigen::VectorXd f_trial = residual(trial);
      if (f_trial.norm() < f.norm() || h == kMaxHalvings - 1) {
        rho = trial;
        f = f_trial;
        accepted = true;
        break;
      }
    }
    if (!accepted) throw NoSubsonicSolution("Newton step cannot stay subsonic");
    if ((t * step).lpNorm<Eigen::Infinity>() <= 1e-15 * rho.lpNorm<Eigen::Infinity>()) break;
  }
  if (f.lpNorm<Eigen::Infinity>() > 1e-11) {
    throw NoSubsonicSolution(std::string(to_string(kind)) + ": Newton did not converge in " +
                             std::to_string(kMaxNewtonIterations) + " iterations");
  }

  JunctionSolution sol;
  sol.coupling = kind;
  sol.iterations = iteration;
  sol.traces = states_at(rho);
  for (std::size_t k = 0; k < d; ++k) {
    // Snap the unchanged pipes so the wave classification sees equality.
    const State& s0 = problem.initial[k];
    if (std::abs(sol.traces[k].rho - s0.rho) <= 1e-13 * s0.rho) sol.traces[k] = s0;
  }
  fill_common(problem, sol);
  return sol;
}

}  // namespace

const char* to_string(CouplingKind kind) {
  switch (kind) {
    case CouplingKind::ArtificialDensity:
      return "artificial_density";
    case CouplingKind::EqualPressure:
      return "equal_pressure";
    case CouplingKind::EqualMomentumFlux:
      return "equal_momentum_flux";
    case CouplingKind::EqualBernoulli:
      return "equal_bernoulli";
    case CouplingKind::EqualStagnationEnthalpy:
      return "equal_stagnation_enthalpy";
  }
  return "?";
}

std::optional<CouplingKind> coupling_from_string(std::string_view name) {
  for (auto kind : {CouplingKind::ArtificialDensity, CouplingKind::EqualPressure,
                    CouplingKind::EqualMomentumFlux, CouplingKind::EqualBernoulli,
                    CouplingKind::EqualStagnationEnthalpy}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::vector<CouplingKind> standard_couplings() {
  return {CouplingKind::ArtificialDensity, CouplingKind::EqualPressure,
          CouplingKind::EqualMomentumFlux, CouplingKind::EqualBernoulli};
}

void JunctionProblem::validate() const {
  if (areas.empty()) throw DomainError("junction needs at least one pipe");
  if (areas.size() != initial.size()) {
    throw DomainError("junction has " + std::to_string(areas.size()) + " areas but " +
                      std::to_string(initial.size()) + " initial states");
  }
  for (std::size_t k = 0; k < areas.size(); ++k) {
    if (!(areas[k] > 0.0) || !std::isfinite(areas[k])) {
      throw DomainError("area of pipe " + std::to_string(k + 1) + " must be positive");
    }
    const State& s = initial[k];
    if (!(s.rho >= 0.0) || !std::isfinite(s.rho) || !std::isfinite(s.u) ||
        (s.rho == 0.0 && s.u != 0.0)) {
      throw DomainError("initial state of pipe " + std::to_string(k + 1) + " is not in D");
    }
  }
}

double JunctionProblem::mass_scale() const {
  double total = 0.0;
  for (std::size_t k = 0; k < areas.size(); ++k) {
    total += areas[k] * initial[k].rho * (1.0 + std::abs(initial[k].u));
  }
  return total > 0.0 ? total : 1.0;
}

double mass_production(const JunctionProblem& problem, double rho_tilde) {
  double total = 0.0;
  for (std::size_t k = 0; k < problem.areas.size(); ++k) {
    const auto fan = solve_riemann(problem.law, State{rho_tilde, 0.0}, problem.initial[k]);
    total += problem.areas[k] * sample(fan, 0.0).momentum();
  }
  return total;
}

double zero_velocity_density(const GasLaw& law, const State& s) {
  if (s.is_vacuum()) return 0.0;
  if (s.u == 0.0) return s.rho;
  const double omega1 = riemann_invariants(law, s).omega1;
  if (omega1 >= 0.0) return 0.0;
  const auto u0 = [&](double r) { return reversed_curve(law, 2, s, r); };
  if (s.u > 0.0) return brent_root(u0, 0.0, s.rho, omega1, s.u);
  double lo = s.rho;
  double f_lo = s.u;
  double hi = 2.0 * s.rho;
  double f_hi = u0(hi);
  for (int i = 0; f_hi < 0.0; ++i) {
    if (i > 200) throw NoConvergence("reversed 2-curve does not reach u = 0");
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    f_hi = u0(hi);
  }
  return brent_root(u0, lo, hi, f_lo, f_hi);
}

Bracket bracket(const JunctionProblem& problem) {
  Bracket br{std::numeric_limits<double>::infinity(), 0.0};
  bool any_vacuum = false;
  for (const State& s : problem.initial) {
    if (s.is_vacuum()) {
      any_vacuum = true;
      continue;
    }
    const double r = zero_velocity_density(problem.law, s);
    br.rho_minus = std::min(br.rho_minus, r);
    br.rho_plus = std::max(br.rho_plus, r);
  }
  if (!std::isfinite(br.rho_minus)) return {0.0, 0.0};
  if (any_vacuum && br.rho_minus > 0.0 && mass_production(problem, br.rho_minus) > 0.0) {
    br.rho_minus = 0.0;
  }
  return br;
}

JunctionSolution solve_junction(const JunctionProblem& problem) {
  problem.validate();
  if (problem.coupling == CouplingKind::ArtificialDensity) {
    return solve_artificial_density(problem);
  }
  return solve_equalisation(problem);
}

DissipationReport dissipation_report(const JunctionProblem& problem, const JunctionSolution& sol,
                                     const std::vector<EntropyGenerator>& generators) {
  const GasLaw& law = problem.law;
  DissipationReport report;
  report.energy_flux_sum = sol.energy_flux_sum;
  for (const auto& gen : generators) {
    GeneratorFlux entry{gen.name, 0.0};
    for (std::size_t k = 0; k < sol.traces.size(); ++k) {
      entry.flux_sum += problem.areas[k] * entropy_pair(law, gen, sol.traces[k]).flux;
    }
    report.generators.push_back(entry);
  }
  if (sol.rho_star) {
    const double h_star = enthalpy(law, State{*sol.rho_star, 0.0});
    const double tol = 1e-10 * (1.0 + h_star);
    double margin = std::numeric_limits<double>::infinity();
    for (const State& trace : sol.traces) {
      if (trace.is_vacuum()) continue;
      const double h = enthalpy(law, trace);
      if (trace.u >= 0.0) margin = std::min(margin, h_star - h);
      if (trace.u <= 0.0) margin = std::min(margin, h - h_star);
    }
    if (!std::isfinite(margin)) margin = 0.0;
    report.enthalpy_margin = margin;
    report.enthalpy_ordering = margin >= -tol;
  }
  return report;
}

Transversality transversality(const GasLaw& law, const std::vector<State>& states,
                              const std::vector<double>& areas) {
  if (states.empty() || states.size() != areas.size()) {
    throw DomainError("transversality needs one area per state");
  }
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> along(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (!strictly_subsonic(law, states[k])) {
      throw DomainError("transversality needs strictly subsonic states");
    }
    const Eigen::Vector2d r2 = eigenvector(law, states[k], 2);
    along[k] = r_star_gradient(law, states[k]).dot(r2);
    mat(0, static_cast<Eigen::Index>(k)) = areas[k] * r2(1);
  }
  for (Eigen::Index k = 1; k < n; ++k) {
    mat(k, k - 1) = along[static_cast<std::size_t>(k - 1)];
    mat(k, k) = -along[static_cast<std::size_t>(k)];
  }
  const double det = mat.determinant();
  return {det, (det > 0.0) - (det < 0.0), mat};
}

}  // namespace gasnet

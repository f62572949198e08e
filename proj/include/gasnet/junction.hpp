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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "gasnet/entropy.hpp"
#include "gasnet/gas_law.hpp"
#include "gasnet/half_riemann.hpp"
#include "gasnet/wave_curves.hpp"

namespace gasnet {

enum class CouplingKind {
  ArtificialDensity,
  EqualPressure,
  EqualMomentumFlux,
  /// u^2/2 + kappa/(gamma-1) rho^(gamma-1).
  EqualBernoulli,
  /// u^2/2 + kappa gamma/(gamma-1) rho^(gamma-1); conserves energy.
  EqualStagnationEnthalpy,
};

const char* to_string(CouplingKind kind);
std::optional<CouplingKind> coupling_from_string(std::string_view name);
/// The artificial-density coupling and the three classical rivals.
std::vector<CouplingKind> standard_couplings();

struct JunctionProblem {
  GasLaw law{1.0, 2.0};
  std::vector<double> areas;
  std::vector<State> initial;
  CouplingKind coupling = CouplingKind::ArtificialDensity;

  /// Throws DomainError unless there is at least one pipe, areas are
  /// positive and finite, and every initial state lies in D.
  void validate() const;
  /// Sum of A_k rho_k (1 + |u_k|), the scale of the mass residual.
  double mass_scale() const;
};

struct JunctionSolution {
  CouplingKind coupling = CouplingKind::ArtificialDensity;
  /// Set for the artificial-density coupling only.
  std::optional<double> rho_star;
  std::vector<State> traces;
  /// Riemann fan on each pipe, from the trace to the initial state.
  std::vector<RiemannSolution> fans;
  /// Boundary solutions against (rho*, 0); artificial density only.
  std::vector<BoundaryTrace> boundary;
  /// Kind of the 2-wave entering each pipe.
  std::vector<WaveKind> wave_types;
  double mass_residual = 0.0;
  /// Sum of A_k G(trace_k) with the physical energy flux G.
  double energy_flux_sum = 0.0;
  bool plateau = false;
  int iterations = 0;
};

/// Sum of A_k rho u over the boundary traces against (rho_tilde, 0).
double mass_production(const JunctionProblem& problem, double rho_tilde);

struct Bracket {
  double rho_minus = 0.0;
  double rho_plus = 0.0;
};

/// Density where the reversed 2-curve through s reaches u = 0.
double zero_velocity_density(const GasLaw& law, const State& s);

/// Smallest and largest zero_velocity_density over the non-vacuum pipes.
/// rho_minus drops to 0 when m(rho_minus) would be positive.
Bracket bracket(const JunctionProblem& problem);

/// Throws NoSubsonicSolution when a rival coupling has no subsonic solution
/// reachable by damped Newton from the initial densities.
JunctionSolution solve_junction(const JunctionProblem& problem);

struct GeneratorFlux {
  std::string name;
  double flux_sum = 0.0;
};

struct DissipationReport {
  std::vector<GeneratorFlux> generators;
  double energy_flux_sum = 0.0;
  /// Stagnation enthalpy ordering around h(rho*, 0); artificial density only.
  std::optional<bool> enthalpy_ordering;
  /// Smallest slack of the ordering inequalities (negative when violated).
  double enthalpy_margin = 0.0;
};

DissipationReport dissipation_report(const JunctionProblem& problem, const JunctionSolution& sol,
                                     const std::vector<EntropyGenerator>& generators);

struct Transversality {
  double determinant = 0.0;
  int sign = 0;
  Eigen::MatrixXd matrix;
};

/// Derivative of (mass flux, R* differences) along r2 on each pipe.
/// Throws DomainError unless every state is strictly subsonic.
Transversality transversality(const GasLaw& law, const std::vector<State>& states,
                              const std::vector<double>& areas);

}  // namespace gasnet

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

#include <variant>
#include <vector>

#include <Eigen/Core>

#include "gasnet/gas_law.hpp"

namespace gasnet {

/// Half-line of velocities a distribution lives on: xi < 0 or xi > 0.
enum class Side { Incoming, Outgoing };

/// Restriction of the Maxwellian M(state, .) to one half-line.
struct MaxwellianTrace {
  State state;
};

/// Point values of (g0, g1) at quadrature nodes; integrals are weighted sums.
struct Tabulated {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<Eigen::Vector2d> values;
};

struct HalfDistribution {
  Side side = Side::Incoming;
  std::variant<MaxwellianTrace, Tabulated> data;

  static HalfDistribution maxwellian_trace(const State& s, Side side);
  /// Throws DomainError if nodes lie on the wrong side, sizes differ or a
  /// value leaves D.
  void validate() const;
};

/// (chi(rho, xi - u), ((1 - theta) u + theta xi) chi(rho, xi - u)).
Eigen::Vector2d maxwellian(const GasLaw& law, const State& s, double xi);

/// Integral of xi M0(rho, 0, xi) over xi > 0, in closed form.
double half_flux(const GasLaw& law, double rho);

/// Kinetic energy H(f, xi) for S(v) = v^2 / 2; zero at f = 0.
double kinetic_energy(const GasLaw& law, const Eigen::Vector2d& f, double xi);

/// Integral of xi g0 over the side of g.
double mass_flux(const GasLaw& law, const HalfDistribution& g);
/// Integral of xi H(g, xi) over the side of g.
double energy_flux(const GasLaw& law, const HalfDistribution& g);

/// Samples a Maxwellian trace at n Gauss-Legendre nodes of its support on
/// the given side. An empty support yields an empty table.
Tabulated tabulate(const GasLaw& law, const State& s, Side side, int n);

/// rho* balancing the incoming mass flux with outgoing Maxwellians
/// M(rho*, 0, .), by inverting the power law of half_flux.
double kinetic_rho_star(const GasLaw& law, const std::vector<double>& areas,
                        const std::vector<HalfDistribution>& incoming);

struct KineticDissipation {
  /// Outgoing energy flux of the competitor, sum A_k int xi H dxi.
  double lhs = 0.0;
  /// Outgoing energy flux of M(rho*, 0, .).
  double rhs = 0.0;
  /// Outgoing mass flux of the competitor minus that of the optimum.
  double mass_defect = 0.0;
  bool ok = false;
};

/// Compares a mass-conserving outgoing competitor with the optimal
/// Maxwellian answer; ok when lhs >= rhs - 1e-10 (1 + |rhs|).
KineticDissipation kinetic_dissipation_check(const GasLaw& law, const std::vector<double>& areas,
                                             const std::vector<HalfDistribution>& incoming,
                                             const std::vector<HalfDistribution>& competitor);

}  // namespace gasnet

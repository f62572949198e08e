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

#include "gasnet/gas_law.hpp"

namespace gasnet {

enum class WaveKind { None, Shock, Rarefaction };

const char* to_string(WaveKind kind);

struct WaveDescriptor {
  int family = 1;
  WaveKind kind = WaveKind::None;
  /// Shock: both equal the shock speed. Rarefaction: fan edges. None: the
  /// characteristic speed of the (unchanged) state.
  double speed_lo = 0.0;
  double speed_hi = 0.0;
};

/// Self-similar Lax solution of the p-system Riemann problem.
struct RiemannSolution {
  GasLaw law;
  State left;
  State mid;
  State right;
  WaveDescriptor wave1;
  WaveDescriptor wave2;
  /// Two rarefactions separated by vacuum on (vacuum_lo, vacuum_hi).
  bool vacuum = false;
  double vacuum_lo = 0.0;
  double vacuum_hi = 0.0;
};

/// Velocity on the forward family-1 or family-2 wave curve through s0 at
/// density rho (shock or rarefaction branch by the sign of rho - rho0).
/// Requires rho0 > 0; throws VacuumEndpoint for rho < 0.
double forward_curve(const GasLaw& law, int family, const State& s0, double rho);

/// Velocity u0 of the state (rho0, u0) whose forward curve passes through s.
double reversed_curve(const GasLaw& law, int family, const State& s, double rho0);

/// du0/drho0 along the reversed curve, from the closed-form derivatives.
double reversed_curve_slope(const GasLaw& law, int family, const State& s, double rho0);

/// Exact solver. The middle state satisfies |u residual| <= 1e-10; a middle
/// density below 1e-12 max(rho_l, rho_r) is reported as vacuum.
RiemannSolution solve_riemann(const GasLaw& law, const State& left, const State& right);

/// State at similarity speed xi = x / t. At a shock exactly at xi the state
/// behind it (to the right) is returned, so sample(sol, 0) is the trace at
/// x = 0+.
State sample(const RiemannSolution& sol, double xi);

/// Shock speed from the Rankine-Hugoniot mass condition.
double shock_speed(const State& a, const State& b);

}  // namespace gasnet

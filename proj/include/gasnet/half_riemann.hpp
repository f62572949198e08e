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

#include <Eigen/Core>

#include "gasnet/gas_law.hpp"
#include "gasnet/wave_curves.hpp"

namespace gasnet {

/// Position of an initial state relative to the artificial left state
/// (rho_tilde, 0). J is the zero-speed 2-shock part of C.
enum class Region { A, B, C, J };

enum class TraceRegime { Sonic1Exit, Subsonic, Sonic2, SupersonicOut, Unperturbed };

const char* to_string(Region r);
const char* to_string(TraceRegime r);

struct BoundaryTrace {
  /// Value at x = 0+.
  State trace;
  /// Unperturbed when no wave enters x > 0, otherwise the sonic type of the
  /// trace.
  TraceRegime regime = TraceRegime::Unperturbed;
  Region region = Region::B;
  /// Sonic classification of the trace, always set.
  SonicClass character = SonicClass::Subsonic;
  /// Full Riemann solution between (rho_tilde, 0) and the initial state.
  RiemannSolution fan;
};

/// The sonic point of R1(rho_tilde, 0) and the lambda2 = 0 point of
/// S1(rho_tilde, 0).
struct Landmarks {
  State alpha;
  State beta;
};

Landmarks landmarks(const GasLaw& law, double rho_tilde);

/// Region from the wave-curve geometry alone: compares the reversed 2-curve
/// of `initial` with W1(rho_tilde, 0) at the landmark densities and at the
/// zero-speed shock partner of `initial`. Never returns J.
Region classify_region(const GasLaw& law, const State& initial, double rho_tilde);

/// Trace of the Riemann problem (rho_tilde, 0) | initial at x = 0+, with the
/// region computed both geometrically and from the sampled fan. Throws
/// ConsistencyError if the two disagree.
BoundaryTrace boundary_trace(const GasLaw& law, const State& initial, double rho_tilde);

/// Artificial density of a trace: the rho_tilde with s on W1(rho_tilde, 0).
/// Closed form for u >= 0, root-find on the shock branch for u < 0.
/// Throws DomainError at vacuum.
double r_star(const GasLaw& law, const State& s);

/// Gradient of r_star with respect to the conserved variables (rho, rho u).
Eigen::Vector2d r_star_gradient(const GasLaw& law, const State& s);

}  // namespace gasnet

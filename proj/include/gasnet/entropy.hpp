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
#include <string>
#include <vector>

#include "gasnet/gas_law.hpp"

namespace gasnet {

/// Convex function S of one velocity variable that parametrises an entropy
/// pair (eta_S, G_S). Convexity is the caller's obligation.
struct EntropyGenerator {
  std::string name;
  std::function<double(double)> s;
  /// Optional derivative S'.
  std::function<double(double)> ds;
  /// Declares S(v) = S(-v).
  bool symmetric = false;
  /// Points where S is not smooth; quadrature cuts the velocity interval there.
  std::vector<double> kinks;

  static EntropyGenerator constant_one();
  /// S(v) = v^2 / 2, whose pair is the physical energy.
  static EntropyGenerator energy();
  /// S(v) = v^2.
  static EntropyGenerator square();
  /// S_M(v) = (-omega_m - v)_+^2 + (v - omega_m)_+^2. Its entropy vanishes
  /// exactly on states whose Riemann invariants lie in [-omega_m, omega_m].
  static EntropyGenerator invariant_band(double omega_m);
  /// S(v) = cosh(v / scale) - 1.
  static EntropyGenerator cosh_like(double scale);
};

/// Spot-checks S(v) == S(-v) at `samples` points spread over [-range, range].
bool symmetric_on_samples(const EntropyGenerator& gen, double range, int samples = 64,
                          double rel_tol = 1e-12);

/// eta_S and G_S by Gauss-Jacobi quadrature in z after v = u + a rho^theta z.
/// Vacuum gives (0, 0). Throws NonConvergedQuadrature if the node doubling
/// does not settle to relative 1e-11.
EntropyPair entropy_pair(const GasLaw& law, const EntropyGenerator& gen, const State& s);

}  // namespace gasnet

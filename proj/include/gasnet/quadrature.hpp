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
#include <span>
#include <vector>

namespace gasnet {

/// Gauss rule on [-1, 1] for the weight (1 - x)^alpha (1 + x)^beta.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch construction. Rules are cached per (n, alpha, beta) and the
/// returned reference stays valid for the lifetime of the program.
const QuadratureRule& gauss_jacobi(int n, double alpha, double beta);

inline const QuadratureRule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

struct WeightedIntegralOptions {
  int min_nodes = 16;
  int max_nodes = 512;
  double rel_tol = 1e-11;
};

/// Integral of (1 - z^2)^lambda f(z) over [z_lo, z_hi] subset of [-1, 1].
///
/// The interval is cut at every breakpoint inside it; pieces touching z = -1
/// or z = +1 use a one-sided Jacobi rule so the algebraic endpoint behaviour
/// of the weight is integrated exactly. The node count doubles from
/// min_nodes until two successive values agree to rel_tol relative to the
/// integral of |f| times the weight; NonConvergedQuadrature otherwise.
double integrate_power_weight(const std::function<double(double)>& f, double lambda,
                              double z_lo = -1.0, double z_hi = 1.0,
                              std::span<const double> breakpoints = {},
                              const WeightedIntegralOptions& options = {});

/// Composite Gauss-Legendre over [lo, hi] with `panels` equal panels.
double integrate_composite(const std::function<double(double)>& f, double lo, double hi,
                           int panels, int nodes_per_panel = 16);

}  // namespace gasnet

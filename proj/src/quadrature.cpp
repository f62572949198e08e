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

#include "gasnet/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "gasnet/errors.hpp"

namespace gasnet {
namespace {

QuadratureRule build_jacobi(int n, double alpha, double beta) {
  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    const double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
    const double den = s * s * (s + 1.0) * (s - 1.0);
    sub(k - 1) = std::sqrt(num / den);
  }
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NonConvergedQuadrature("Golub-Welsch eigensolve failed for n=" + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

// Value and absolute-value integral of one piece at a fixed node count.
struct PieceSum {
  double value = 0.0;
  double magnitude = 0.0;
};

PieceSum integrate_piece(const std::function<double(double)>& f, double lambda, double p,
                         double q, int n) {
  constexpr double kSnap = 1e-13;
  const bool left_edge = p <= -1.0 + kSnap;
  const bool right_edge = q >= 1.0 - kSnap;
  if (left_edge) p = -1.0;
  if (right_edge) q = 1.0;
  const double h = 0.5 * (q - p);
  const double mid = 0.5 * (q + p);
  PieceSum out;
  if (h <= 0.0) return out;

  const double alpha = right_edge ? lambda : 0.0;
  const double beta = left_edge ? lambda : 0.0;
  const QuadratureRule& rule = gauss_jacobi(n, alpha, beta);
  double scale = h;
  if (left_edge && right_edge) {
    scale = 1.0;
  } else if (left_edge || right_edge) {
    scale = h * std::pow(h, lambda);
  }
  for (int i = 0; i < n; ++i) {
    const double t = rule.nodes[i];
    const double z = mid + h * t;
    double residual_weight = 1.0;
    if (left_edge && right_edge) {
      residual_weight = 1.0;
    } else if (left_edge) {
      residual_weight = std::pow(std::max(0.0, 1.0 - z), lambda);
    } else if (right_edge) {
      residual_weight = std::pow(std::max(0.0, 1.0 + z), lambda);
    } else {
      residual_weight = std::pow(std::max(0.0, 1.0 - z * z), lambda);
    }
    const double fz = f(z);
    out.value += rule.weights[i] * residual_weight * fz;
    out.magnitude += rule.weights[i] * residual_weight * std::abs(fz);
  }
  out.value *= scale;
  out.magnitude *= scale;
  return out;
}

}  // namespace

const QuadratureRule& gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw DomainError("quadrature rule needs at least one node");
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("Jacobi exponents must exceed -1");
  }
  static std::mutex mutex;
  static std::map<std::tuple<int, double, double>, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, alpha, beta}];
  if (!slot) slot = std::make_unique<QuadratureRule>(build_jacobi(n, alpha, beta));
  return *slot;
}

double integrate_power_weight(const std::function<double(double)>& f, double lambda,
                              double z_lo, double z_hi, std::span<const double> breakpoints,
                              const WeightedIntegralOptions& options) {
  z_lo = std::max(z_lo, -1.0);
  z_hi = std::min(z_hi, 1.0);
  if (!(z_hi > z_lo)) return 0.0;

  std::vector<double> cuts{z_lo};
  for (double b : breakpoints) {
    if (b > z_lo && b < z_hi) cuts.push_back(b);
  }
  cuts.push_back(z_hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto total = [&](int n) {
    PieceSum sum;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const PieceSum piece = integrate_piece(f, lambda, cuts[i], cuts[i + 1], n);
      sum.value += piece.value;
      sum.magnitude += piece.magnitude;
    }
    return sum;
  };

  int n = options.min_nodes;
  PieceSum previous = total(n);
  while (2 * n <= options.max_nodes) {
    n *= 2;
    const PieceSum current = total(n);
    if (current.magnitude == 0.0) return 0.0;
    if (std::abs(current.value - previous.value) <= options.rel_tol * current.magnitude) {
      return current.value;
    }
    previous = current;
  }
  throw NonConvergedQuadrature("weighted quadrature did not converge with " +
                               std::to_string(options.max_nodes) + " nodes");
}

double integrate_composite(const std::function<double(double)>& f, double lo, double hi,
                           int panels, int nodes_per_panel) {
  if (!(hi > lo)) return 0.0;
  const QuadratureRule& rule = gauss_legendre(nodes_per_panel);
  const double width = (hi - lo) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * width;
    const double h = 0.5 * width;
    double panel = 0.0;
    for (int i = 0; i < nodes_per_panel; ++i) {
      panel += rule.weights[i] * f(a + h * (1.0 + rule.nodes[i]));
    }
    sum += h * panel;
  }
  return sum;
}

}  // namespace gasnet

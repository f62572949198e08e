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
#include <optional>
#include <vector>

namespace gasnet {

/// One Gaussian Maxwellian rho / sqrt(2 pi theta) exp(-(xi - u)^2 / (2 theta)).
struct GaussianComponent {
  double rho = 0.0;
  double u = 0.0;
  double theta = 1.0;
};

double gaussian_density(const GaussianComponent& c, double xi);

/// Incoming distribution on xi < 0: a finite sum of Gaussian components.
struct EulerInflow {
  std::vector<GaussianComponent> mixture;

  double density(double xi) const;
  /// Throws DomainError for negative densities or non-positive temperatures.
  void validate() const;
};

struct HalfMoments {
  double m1 = 0.0;
  double m3 = 0.0;
};

/// First and third moments of M(rho, 0, theta) over xi > 0.
HalfMoments gaussian_half_moments(double rho, double theta);

/// Integral of xi^power g(xi) over xi < 0 for power 0, 1, 2 or 3.
double inflow_moment(const EulerInflow& g, int power);

struct EulerJunctionResult {
  double rho_star = 0.0;
  /// Absent when there is no inflow.
  std::optional<double> theta_star;
  /// -sum A_k int_{xi<0} xi g_k and -sum A_k int_{xi<0} xi^3 g_k.
  double inflow_mass = 0.0;
  double inflow_energy = 0.0;
  double mass_residual = 0.0;
  double energy_residual = 0.0;
  double entropy_flux_sum = 0.0;
};

/// Outgoing M(rho*, 0, theta*) on every pipe balancing mass and energy.
EulerJunctionResult solve_euler_junction(const std::vector<double>& areas,
                                         const std::vector<EulerInflow>& incoming);

/// Integral of xi g log g over [lo, hi] by composite Gauss-Legendre.
double entropy_flux(const std::function<double(double)>& g, double lo, double hi,
                    int panels = 96);

/// Sum over pipes of the outgoing Maxwellian entropy flux plus the incoming
/// one, each integrated over +-12 sqrt(theta) around its centre.
double euler_entropy_check(const std::vector<double>& areas,
                           const std::vector<EulerInflow>& incoming,
                           const EulerJunctionResult& result);

/// Outgoing entropy flux of M(rho, 0, theta) on xi > 0 by quadrature.
double outgoing_entropy_flux(double rho, double theta);

}  // namespace gasnet

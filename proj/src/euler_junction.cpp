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

#include "gasnet/euler_junction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gasnet/errors.hpp"
#include "gasnet/quadrature.hpp"

namespace gasnet {
namespace {

constexpr double kTruncation = 12.0;

void check_sizes(const std::vector<double>& areas, const std::vector<EulerInflow>& incoming) {
  if (areas.empty() || areas.size() != incoming.size()) {
    throw DomainError("Euler junction needs one inflow per pipe");
  }
  for (std::size_t k = 0; k < areas.size(); ++k) {
    if (!(areas[k] > 0.0) || !std::isfinite(areas[k])) {
      throw DomainError("area of pipe " + std::to_string(k + 1) + " must be positive");
    }
    incoming[k].validate();
  }
}

double g_log_g(double g) { return g > 0.0 ? g * std::log(g) : 0.0; }

}  // namespace

double gaussian_density(const GaussianComponent& c, double xi) {
  if (c.rho == 0.0) return 0.0;
  const double v = xi - c.u;
  return c.rho / std::sqrt(2.0 * std::numbers::pi * c.theta) * std::exp(-v * v / (2.0 * c.theta));
}

double EulerInflow::density(double xi) const {
  double total = 0.0;
  for (const auto& c : mixture) total += gaussian_density(c, xi);
  return total;
}

void EulerInflow::validate() const {
  for (const auto& c : mixture) {
    if (!(c.rho >= 0.0) || !std::isfinite(c.rho) || !std::isfinite(c.u) || !(c.theta > 0.0) ||
        !std::isfinite(c.theta)) {
      throw DomainError("Gaussian inflow component needs rho >= 0 and theta > 0");
    }
  }
}

HalfMoments gaussian_half_moments(double rho, double theta) {
  if (!(rho >= 0.0) || !(theta > 0.0)) throw DomainError("half moments need rho >= 0, theta > 0");
  return {rho * std::sqrt(theta / (2.0 * std::numbers::pi)),
          rho * std::pow(theta, 1.5) * std::sqrt(2.0 / std::numbers::pi)};
}

double inflow_moment(const EulerInflow& g, int power) {
  if (power < 0 || power > 3) throw DomainError("inflow moments are available up to power 3");
  double total = 0.0;
  for (const auto& c : g.mixture) {
    if (c.rho == 0.0) continue;
    // xi = u + s t with t standard normal, restricted to t < b.
    const double s = std::sqrt(c.theta);
    const double b = -c.u / s;
    const double cdf = 0.5 * std::erfc(-b / std::numbers::sqrt2);
    const double pdf = std::exp(-0.5 * b * b) / std::sqrt(2.0 * std::numbers::pi);
    const double t0 = cdf;
    const double t1 = -pdf;
    const double t2 = cdf - b * pdf;
    const double t3 = -(b * b + 2.0) * pdf;
    const double u = c.u;
    double value = 0.0;
    switch (power) {
      case 0:
        value = t0;
        break;
      case 1:
        value = u * t0 + s * t1;
        break;
      case 2:
        value = u * u * t0 + 2.0 * u * s * t1 + s * s * t2;
        break;
      default:
        value = u * u * u * t0 + 3.0 * u * u * s * t1 + 3.0 * u * s * s * t2 + s * s * s * t3;
        break;
    }
    total += c.rho * value;
  }
  return total;
}

EulerJunctionResult solve_euler_junction(const std::vector<double>& areas,
                                         const std::vector<EulerInflow>& incoming) {
  check_sizes(areas, incoming);
  EulerJunctionResult r;
  double total_area = 0.0;
  for (std::size_t k = 0; k < areas.size(); ++k) {
    r.inflow_mass -= areas[k] * inflow_moment(incoming[k], 1);
    r.inflow_energy -= areas[k] * inflow_moment(incoming[k], 3);
    total_area += areas[k];
  }
  if (!(r.inflow_mass > 0.0) || !(r.inflow_energy > 0.0)) {
    r.rho_star = 0.0;
    r.theta_star.reset();
    r.mass_residual = -r.inflow_mass;
    r.energy_residual = -r.inflow_energy;
    r.entropy_flux_sum = euler_entropy_check(areas, incoming, r);
    return r;
  }
  const double theta = r.inflow_energy / (2.0 * r.inflow_mass);
  r.theta_star = theta;
  r.rho_star = r.inflow_mass / (total_area * std::sqrt(theta / (2.0 * std::numbers::pi)));
  const HalfMoments out = gaussian_half_moments(r.rho_star, theta);
  r.mass_residual = total_area * out.m1 - r.inflow_mass;
  r.energy_residual = total_area * out.m3 - r.inflow_energy;
  r.entropy_flux_sum = euler_entropy_check(areas, incoming, r);
  return r;
}

double entropy_flux(const std::function<double(double)>& g, double lo, double hi, int panels) {
  if (!(hi > lo)) return 0.0;
  return integrate_composite([&](double xi) { return xi * g_log_g(g(xi)); }, lo, hi, panels);
}

double outgoing_entropy_flux(double rho, double theta) {
  if (rho == 0.0) return 0.0;
  const GaussianComponent c{rho, 0.0, theta};
  return entropy_flux([&](double xi) { return gaussian_density(c, xi); }, 0.0,
                      kTruncation * std::sqrt(theta));
}

double euler_entropy_check(const std::vector<double>& areas,
                           const std::vector<EulerInflow>& incoming,
                           const EulerJunctionResult& result) {
  check_sizes(areas, incoming);
  const double outgoing = result.theta_star && result.rho_star > 0.0
                              ? outgoing_entropy_flux(result.rho_star, *result.theta_star)
                              : 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < areas.size(); ++k) {
    total += areas[k] * outgoing;
    double lo = 0.0;
    double hi = -std::numeric_limits<double>::infinity();
    double narrowest = std::numeric_limits<double>::infinity();
    for (const auto& c : incoming[k].mixture) {
      if (c.rho == 0.0) continue;
      lo = std::min(lo, c.u - kTruncation * std::sqrt(c.theta));
      hi = std::max(hi, c.u + kTruncation * std::sqrt(c.theta));
      narrowest = std::min(narrowest, std::sqrt(c.theta));
    }
    hi = std::min(hi, 0.0);
    if (!(hi > lo)) continue;
    const int panels = static_cast<int>(
        std::clamp(std::ceil(4.0 * (hi - lo) / narrowest), 96.0, 8192.0));
    const double in =
        entropy_flux([&](double xi) { return incoming[k].density(xi); }, lo, hi, panels);
    total += areas[k] * in;
  }
  return total;
}

}  // namespace gasnet

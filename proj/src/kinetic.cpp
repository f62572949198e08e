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

#include "gasnet/kinetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "gasnet/errors.hpp"
#include "gasnet/quadrature.hpp"

namespace gasnet {
namespace {

// z-interval of the Maxwellian support [-1, 1] lying on the given side.
bool side_interval(const State& s, double width, Side side, double& z_lo, double& z_hi) {
  const double z0 = std::clamp(-s.u / width, -1.0, 1.0);
  if (side == Side::Incoming) {
    z_lo = -1.0;
    z_hi = z0;
  } else {
    z_lo = z0;
    z_hi = 1.0;
  }
  return z_hi > z_lo;
}

// Integral over the side of xi * phi(xi, M(s, xi)), written in z with the
// weight (1 - z^2)^lambda factored out. `phi_reduced` receives (xi, z).
template <class F>
double maxwellian_side_integral(const GasLaw& law, const State& s, Side side, F&& phi_reduced) {
  if (s.is_vacuum()) return 0.0;
  const double width = law.a_gamma() * std::pow(s.rho, law.theta());
  double z_lo = 0.0;
  double z_hi = 0.0;
  if (!side_interval(s, width, side, z_lo, z_hi)) return 0.0;
  const auto f = [&](double z) { return phi_reduced(s.u + width * z, z); };
  return width * integrate_power_weight(f, law.lambda(), z_lo, z_hi);
}

template <class F>
double tabulated_integral(const Tabulated& t, F&& phi) {
  double total = 0.0;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) total += t.weights[i] * phi(t.nodes[i], t.values[i]);
  return total;
}

}  // namespace

HalfDistribution HalfDistribution::maxwellian_trace(const State& s, Side side) {
  return {side, MaxwellianTrace{s}};
}

void HalfDistribution::validate() const {
  if (const auto* m = std::get_if<MaxwellianTrace>(&data)) {
    const State& s = m->state;
    if (!(s.rho >= 0.0) || !std::isfinite(s.u) || (s.rho == 0.0 && s.u != 0.0)) {
      throw DomainError("Maxwellian trace state is not in D");
    }
    return;
  }
  const auto& t = std::get<Tabulated>(data);
  if (t.nodes.size() != t.weights.size() || t.nodes.size() != t.values.size()) {
    throw DomainError("tabulated distribution has mismatched sizes");
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const double xi = t.nodes[i];
    if ((side == Side::Incoming && xi > 0.0) || (side == Side::Outgoing && xi < 0.0)) {
      throw DomainError("tabulated node " + std::to_string(i) + " lies on the wrong side");
    }
    const auto& g = t.values[i];
    if (!(g(0) >= 0.0) || !std::isfinite(g(1)) || (g(0) == 0.0 && g(1) != 0.0)) {
      throw DomainError("tabulated value " + std::to_string(i) + " is not in D");
    }
  }
}

Eigen::Vector2d maxwellian(const GasLaw& law, const State& s, double xi) {
  if (s.is_vacuum()) return Eigen::Vector2d::Zero();
  const double width = law.a_gamma() * std::pow(s.rho, law.theta());
  const double v = xi - s.u;
  const double base = width * width - v * v;
  if (base <= 0.0) return Eigen::Vector2d::Zero();
  const double chi = law.c_gamma_kappa() * std::pow(base, law.lambda());
  const double theta = law.theta();
  return {chi, ((1.0 - theta) * s.u + theta * xi) * chi};
}

double half_flux(const GasLaw& law, double rho) {
  if (!(rho >= 0.0)) throw DomainError("half flux needs a non-negative density");
  if (rho == 0.0) return 0.0;
  const double g = law.gamma();
  const double width = law.a_gamma() * std::pow(rho, law.theta());
  return law.c_gamma_kappa() * std::pow(width, (g + 1.0) / (g - 1.0)) /
         (2.0 * (law.lambda() + 1.0));
}

double kinetic_energy(const GasLaw& law, const Eigen::Vector2d& f, double xi) {
  const double f0 = f(0);
  const double f1 = f(1);
  if (f0 == 0.0) return 0.0;
  const double theta = law.theta();
  const double p = 1.0 + 1.0 / law.lambda();
  return theta / (1.0 - theta) * 0.5 * xi * xi * f0 +
         theta / (2.0 * std::pow(law.c_gamma_kappa(), 1.0 / law.lambda())) * std::pow(f0, p) / p +
         0.5 / (1.0 - theta) * f1 * f1 / f0 - theta / (1.0 - theta) * xi * f1;
}

double mass_flux(const GasLaw& law, const HalfDistribution& g) {
  if (const auto* m = std::get_if<MaxwellianTrace>(&g.data)) {
    const double width = law.a_gamma() * std::pow(m->state.rho, law.theta());
    const double scale = law.c_gamma_kappa() * std::pow(width, 2.0 * law.lambda());
    return maxwellian_side_integral(law, m->state, g.side,
                                    [&](double xi, double) { return xi * scale; });
  }
  return tabulated_integral(std::get<Tabulated>(g.data),
                            [](double xi, const Eigen::Vector2d& v) { return xi * v(0); });
}

double energy_flux(const GasLaw& law, const HalfDistribution& g) {
  if (const auto* m = std::get_if<MaxwellianTrace>(&g.data)) {
    const State& s = m->state;
    const double theta = law.theta();
    const double lambda = law.lambda();
    const double width = law.a_gamma() * std::pow(s.rho, theta);
    const double chi_scale = law.c_gamma_kappa() * std::pow(width, 2.0 * lambda);
    // H(M) = chi * P(xi) + theta/(2 p) c^(-1/lambda) chi^p with p = 1 + 1/lambda,
    // and chi^p = c^p width^(2 lambda + 2) (1 - z^2)^(lambda + 1).
    const double p = 1.0 + 1.0 / lambda;
    const double pressure_term = theta / (2.0 * p) * law.c_gamma_kappa() *
                                 std::pow(width, 2.0 * lambda + 2.0);
    return maxwellian_side_integral(law, s, g.side, [&](double xi, double z) {
      const double m1 = (1.0 - theta) * s.u + theta * xi;
      const double poly = theta / (1.0 - theta) * 0.5 * xi * xi + 0.5 / (1.0 - theta) * m1 * m1 -
                          theta / (1.0 - theta) * xi * m1;
      return xi * (chi_scale * poly + pressure_term * (1.0 - z * z));
    });
  }
  return tabulated_integral(std::get<Tabulated>(g.data),
                            [&](double xi, const Eigen::Vector2d& v) {
                              return xi * kinetic_energy(law, v, xi);
                            });
}

Tabulated tabulate(const GasLaw& law, const State& s, Side side, int n) {
  Tabulated t;
  if (s.is_vacuum()) return t;
  const auto inv = riemann_invariants(law, s);
  const double lo = side == Side::Incoming ? inv.omega1 : std::max(0.0, inv.omega1);
  const double hi = side == Side::Incoming ? std::min(0.0, inv.omega2) : inv.omega2;
  if (!(hi > lo)) return t;
  const auto& rule = gauss_legendre(n);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double xi = 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.nodes[i];
    t.nodes.push_back(xi);
    t.weights.push_back(0.5 * (hi - lo) * rule.weights[i]);
    t.values.push_back(maxwellian(law, s, xi));
  }
  return t;
}

double kinetic_rho_star(const GasLaw& law, const std::vector<double>& areas,
                        const std::vector<HalfDistribution>& incoming) {
  if (areas.size() != incoming.size() || areas.empty()) {
    throw DomainError("kinetic balance needs one incoming distribution per pipe");
  }
  double inflow = 0.0;
  double total_area = 0.0;
  for (std::size_t k = 0; k < areas.size(); ++k) {
    if (incoming[k].side != Side::Incoming) {
      throw DomainError("kinetic balance needs incoming distributions");
    }
    incoming[k].validate();
    inflow -= areas[k] * mass_flux(law, incoming[k]);
    total_area += areas[k];
  }
  if (inflow <= 0.0) return 0.0;
  return std::pow(inflow / (total_area * half_flux(law, 1.0)), 2.0 / (law.gamma() + 1.0));
}

KineticDissipation kinetic_dissipation_check(const GasLaw& law, const std::vector<double>& areas,
                                             const std::vector<HalfDistribution>& incoming,
                                             const std::vector<HalfDistribution>& competitor) {
  if (competitor.size() != areas.size()) {
    throw DomainError("competitor needs one outgoing distribution per pipe");
  }
  const double rho_star = kinetic_rho_star(law, areas, incoming);
  const auto optimum = HalfDistribution::maxwellian_trace(State{rho_star, 0.0}, Side::Outgoing);
  KineticDissipation out;
  const double optimum_energy = energy_flux(law, optimum);
  const double optimum_mass = mass_flux(law, optimum);
  for (std::size_t k = 0; k < areas.size(); ++k) {
    if (competitor[k].side != Side::Outgoing) {
      throw DomainError("competitor distributions must be outgoing");
    }
    competitor[k].validate();
    out.lhs += areas[k] * energy_flux(law, competitor[k]);
    out.rhs += areas[k] * optimum_energy;
    out.mass_defect += areas[k] * (mass_flux(law, competitor[k]) - optimum_mass);
  }
  out.ok = out.lhs >= out.rhs - 1e-10 * (1.0 + std::abs(out.rhs));
  return out;
}

}  // namespace gasnet

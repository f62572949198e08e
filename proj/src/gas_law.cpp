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

#include "gasnet/gas_law.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gasnet/errors.hpp"

namespace gasnet {

GasLaw::GasLaw(double kappa, double gamma) : kappa_(kappa), gamma_(gamma) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw DomainError("kappa must be positive, got " + std::to_string(kappa));
  }
  if (!(gamma > 1.0 && gamma < 3.0)) {
    throw DomainError("gamma must lie in (1, 3), got " + std::to_string(gamma));
  }
  theta_ = 0.5 * (gamma - 1.0);
  lambda_ = 1.0 / (gamma - 1.0) - 0.5;
  sound_coefficient_ = std::sqrt(kappa * gamma);
  a_gamma_ = 2.0 * sound_coefficient_ / (gamma - 1.0);
  // Beta(1/2, lambda + 1).
  j_lambda_ = std::exp(0.5 * std::log(std::numbers::pi) + std::lgamma(lambda_ + 1.0) -
                       std::lgamma(lambda_ + 1.5));
  c_gamma_kappa_ = std::pow(a_gamma_, -2.0 / (gamma - 1.0)) / j_lambda_;
}

double GasLaw::sound_speed(double rho) const {
  return rho > 0.0 ? sound_coefficient_ * std::pow(rho, theta_) : 0.0;
}

State State::make(double rho, double u) {
  if (!std::isfinite(rho) || !std::isfinite(u)) {
    throw DomainError("state components must be finite");
  }
  if (std::abs(rho) < 1e-300) return {0.0, 0.0};
  if (rho < 0.0) throw DomainError("negative density " + std::to_string(rho));
  return {rho, u};
}

State State::from_conserved(double rho, double momentum) {
  if (!std::isfinite(rho) || !std::isfinite(momentum)) {
    throw DomainError("conserved components must be finite");
  }
  if (std::abs(rho) < 1e-300) {
    if (momentum != 0.0 && std::abs(momentum) > 1e-300) {
      throw DomainError("vacuum with nonzero momentum is not in the state space");
    }
    return {0.0, 0.0};
  }
  if (rho < 0.0) throw DomainError("negative density " + std::to_string(rho));
  return {rho, momentum / rho};
}

const char* to_string(SonicClass c) {
  switch (c) {
    case SonicClass::Subsonic:
      return "subsonic";
    case SonicClass::Sonic1:
      return "sonic1";
    case SonicClass::Sonic2:
      return "sonic2";
    case SonicClass::Supersonic:
      return "supersonic";
  }
  return "?";
}

CharacteristicSpeeds eigenvalues(const GasLaw& law, const State& s) {
  const double c = law.sound_speed(s.rho);
  return {s.u - c, s.u + c};
}

RiemannInvariants riemann_invariants(const GasLaw& law, const State& s) {
  const double w = s.rho > 0.0 ? law.a_gamma() * std::pow(s.rho, law.theta()) : 0.0;
  return {s.u - w, s.u + w};
}

State state_from_invariants(const GasLaw& law, double omega1, double omega2) {
  if (omega2 < omega1) throw DomainError("omega1 must not exceed omega2");
  const double w = 0.5 * (omega2 - omega1) / law.a_gamma();
  if (w == 0.0) return {0.0, 0.0};
  return State::make(std::pow(w, 1.0 / law.theta()), 0.5 * (omega1 + omega2));
}

SonicClass classify(const GasLaw& law, const State& s) {
  const double c = law.sound_speed(s.rho);
  const double tol = 1e-9 * std::max(1.0, std::abs(s.u) + c);
  const double l1 = s.u - c;
  const double l2 = s.u + c;
  if (std::abs(l1) <= tol) return SonicClass::Sonic1;
  if (std::abs(l2) <= tol) return SonicClass::Sonic2;
  if (l1 < 0.0 && l2 > 0.0) return SonicClass::Subsonic;
  return SonicClass::Supersonic;
}

Eigen::Vector2d eigenvector(const GasLaw& law, const State& s, int family) {
  const auto speeds = eigenvalues(law, s);
  return {1.0, family == 1 ? speeds.lambda1 : speeds.lambda2};
}

Eigen::Vector2d flux(const GasLaw& law, const State& s) {
  return {s.rho * s.u, momentum_flux(law, s)};
}

EntropyPair energy_pair(const GasLaw& law, const State& s) {
  if (s.rho == 0.0) return {0.0, 0.0};
  const double g = law.gamma();
  const double p = law.kappa() * std::pow(s.rho, g);
  const double kinetic = 0.5 * s.rho * s.u * s.u;
  return {kinetic + p / (g - 1.0), kinetic * s.u + g * p * s.u / (g - 1.0)};
}

Eigen::Vector2d energy_gradient(const GasLaw& law, const State& s) {
  const double g = law.gamma();
  const double h =
      s.rho > 0.0 ? law.kappa() * g / (g - 1.0) * std::pow(s.rho, g - 1.0) : 0.0;
  return {h - 0.5 * s.u * s.u, s.u};
}

double pressure(const GasLaw& law, const State& s) {
  return s.rho > 0.0 ? law.kappa() * std::pow(s.rho, law.gamma()) : 0.0;
}

double momentum_flux(const GasLaw& law, const State& s) {
  return s.rho * s.u * s.u + pressure(law, s);
}

double bernoulli(const GasLaw& law, const State& s) {
  if (s.rho == 0.0) return 0.0;
  const double g = law.gamma();
  return 0.5 * s.u * s.u + law.kappa() / (g - 1.0) * std::pow(s.rho, g - 1.0);
}

double enthalpy(const GasLaw& law, const State& s) {
  if (s.rho == 0.0) return 0.0;
  const double g = law.gamma();
  return 0.5 * s.u * s.u + law.kappa() * g / (g - 1.0) * std::pow(s.rho, g - 1.0);
}

}  // namespace gasnet

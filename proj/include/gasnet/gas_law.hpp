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

namespace gasnet {

/// Pressure law p = kappa * rho^gamma together with the constants derived
/// from it. Immutable once constructed.
class GasLaw {
 public:
  /// Throws DomainError unless kappa > 0 and 1 < gamma < 3.
  GasLaw(double kappa, double gamma);

  double kappa() const { return kappa_; }
  double gamma() const { return gamma_; }
  /// (gamma - 1) / 2, the exponent of the sound speed in rho.
  double theta() const { return theta_; }
  /// 1/(gamma - 1) - 1/2, the exponent of the kinetic Maxwellian.
  double lambda() const { return lambda_; }
  /// 2 sqrt(gamma kappa) / (gamma - 1), scale of the Riemann invariants.
  double a_gamma() const { return a_gamma_; }
  /// Integral of (1 - z^2)^lambda over [-1, 1].
  double j_lambda() const { return j_lambda_; }
  /// Normalisation making the Maxwellian integrate to rho.
  double c_gamma_kappa() const { return c_gamma_kappa_; }
  /// sqrt(kappa gamma); the sound speed is sound_coefficient() * rho^theta.
  double sound_coefficient() const { return sound_coefficient_; }

  double sound_speed(double rho) const;

 private:
  double kappa_;
  double gamma_;
  double theta_;
  double lambda_;
  double a_gamma_;
  double j_lambda_;
  double c_gamma_kappa_;
  double sound_coefficient_;
};

/// A point (rho, u) of the state space D = {rho > 0} u {(0, 0)}.
struct State {
  double rho = 0.0;
  double u = 0.0;

  /// Validates and canonicalises: |rho| < 1e-300 becomes the vacuum (0, 0).
  /// Throws DomainError for negative or non-finite input.
  static State make(double rho, double u);
  static State from_conserved(double rho, double momentum);

  double momentum() const { return rho * u; }
  bool is_vacuum() const { return rho == 0.0; }
  Eigen::Vector2d conserved() const { return {rho, rho * u}; }

  friend bool operator==(const State&, const State&) = default;
};

struct CharacteristicSpeeds {
  double lambda1;
  double lambda2;
};

struct RiemannInvariants {
  double omega1;
  double omega2;
};

enum class SonicClass { Subsonic, Sonic1, Sonic2, Supersonic };

const char* to_string(SonicClass c);

CharacteristicSpeeds eigenvalues(const GasLaw& law, const State& s);
RiemannInvariants riemann_invariants(const GasLaw& law, const State& s);
/// Inverse of riemann_invariants for omega1 <= omega2.
State state_from_invariants(const GasLaw& law, double omega1, double omega2);

/// Sign pattern of (lambda1, lambda2). A speed counts as zero when
/// |lambda_i| <= 1e-9 * max(1, |u| + c(rho)). Sonic1 is tested first, so the
/// vacuum (both speeds zero) reports Sonic1.
SonicClass classify(const GasLaw& law, const State& s);

/// Eigenvectors r_k = (1, lambda_k) in conserved coordinates.
Eigen::Vector2d eigenvector(const GasLaw& law, const State& s, int family);

/// Physical flux (rho u, rho u^2 + p).
Eigen::Vector2d flux(const GasLaw& law, const State& s);

struct EntropyPair {
  double eta;
  double flux;
};

/// Physical energy eta = rho u^2/2 + kappa rho^gamma/(gamma-1) and its flux.
EntropyPair energy_pair(const GasLaw& law, const State& s);

/// Gradient of the energy w.r.t. the conserved variables (rho, rho u).
Eigen::Vector2d energy_gradient(const GasLaw& law, const State& s);

double pressure(const GasLaw& law, const State& s);
double momentum_flux(const GasLaw& law, const State& s);
/// u^2/2 + kappa/(gamma-1) rho^(gamma-1). Zero at vacuum.
double bernoulli(const GasLaw& law, const State& s);
/// Stagnation enthalpy u^2/2 + kappa gamma/(gamma-1) rho^(gamma-1), the
/// derivative of the energy in rho at zero velocity. Zero at vacuum.
double enthalpy(const GasLaw& law, const State& s);

}  // namespace gasnet

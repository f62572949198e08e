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

#include "gasnet/half_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gasnet/errors.hpp"
#include "gasnet/roots.hpp"
#include "hugoniot.hpp"

namespace gasnet {
namespace {

using detail::hugoniot_jump;
using detail::hugoniot_jump_slope;

bool allowed(Region region, SonicClass c) {
  switch (region) {
    case Region::A:
      return c == SonicClass::Sonic1;
    case Region::B:
      return c == SonicClass::Subsonic || c == SonicClass::Sonic1 || c == SonicClass::Sonic2;
    case Region::C:
      return c == SonicClass::Sonic2 || c == SonicClass::Supersonic;
    case Region::J:
      return c == SonicClass::Subsonic || c == SonicClass::Supersonic ||
             c == SonicClass::Sonic2;
  }
  return false;
}

TraceRegime regime_of(SonicClass c) {
  switch (c) {
    case SonicClass::Sonic1:
      return TraceRegime::Sonic1Exit;
    case SonicClass::Subsonic:
      return TraceRegime::Subsonic;
    case SonicClass::Sonic2:
      return TraceRegime::Sonic2;
    case SonicClass::Supersonic:
      return TraceRegime::SupersonicOut;
  }
  return TraceRegime::Subsonic;
}

// Density rho0 > initial.rho on the reversed 2-shock curve where the shock
// to `initial` is stationary. Requires lambda2(initial) < 0.
double stationary_shock_partner(const GasLaw& law, const State& initial) {
  const double rho_hat = initial.rho;
  const double flux_hat = initial.momentum();
  const auto speed = [&](double rho0) {
    return (rho0 * reversed_curve(law, 2, initial, rho0) - flux_hat) / (rho0 - rho_hat);
  };
  double lo = rho_hat * (1.0 + 1e-6);
  double f_lo = speed(lo);
  for (int i = 0; f_lo >= 0.0; ++i) {
    if (i > 40) return lo;
    lo = rho_hat + 0.5 * (lo - rho_hat);
    f_lo = speed(lo);
  }
  double hi = 2.0 * rho_hat;
  double f_hi = speed(hi);
  for (int i = 0; f_hi < 0.0; ++i) {
    if (i > 200) throw NoConvergence("no stationary 2-shock partner found");
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    f_hi = speed(hi);
  }
  return brent_root(speed, lo, hi, f_lo, f_hi);
}

}  // namespace

const char* to_string(Region r) {
  switch (r) {
    case Region::A:
      return "A";
    case Region::B:
      return "B";
    case Region::C:
      return "C";
    case Region::J:
      return "J";
  }
  return "?";
}

const char* to_string(TraceRegime r) {
  switch (r) {
    case TraceRegime::Sonic1Exit:
      return "sonic1-exit";
    case TraceRegime::Subsonic:
      return "subsonic";
    case TraceRegime::Sonic2:
      return "sonic2";
    case TraceRegime::SupersonicOut:
      return "supersonic-out";
    case TraceRegime::Unperturbed:
      return "unperturbed";
  }
  return "?";
}

Landmarks landmarks(const GasLaw& law, double rho_tilde) {
  if (!(rho_tilde >= 0.0) || !std::isfinite(rho_tilde)) {
    throw DomainError("landmarks need a finite non-negative density");
  }
  if (rho_tilde == 0.0) return {};
  const double theta = law.theta();
  const double c0 = law.sound_coefficient();
  const double rho_alpha = rho_tilde * std::pow(2.0 / (law.gamma() + 1.0), 1.0 / theta);
  const State alpha{rho_alpha, c0 * std::pow(rho_alpha, theta)};

  const auto lambda2_on_shock = [&](double rho) {
    return c0 * std::pow(rho, theta) - hugoniot_jump(law, rho, rho_tilde);
  };
  double lo = rho_tilde;
  double f_lo = lambda2_on_shock(lo);
  double hi = 2.0 * rho_tilde;
  double f_hi = lambda2_on_shock(hi);
  for (int i = 0; f_hi > 0.0; ++i) {
    if (i > 200) throw NoConvergence("could not bracket the beta landmark");
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    f_hi = lambda2_on_shock(hi);
  }
  const double rho_beta = brent_root(lambda2_on_shock, lo, hi, f_lo, f_hi);
  return {alpha, {rho_beta, -hugoniot_jump(law, rho_beta, rho_tilde)}};
}

Region classify_region(const GasLaw& law, const State& initial, double rho_tilde) {
  if (rho_tilde == 0.0) {
    if (initial.is_vacuum()) return Region::A;
    return riemann_invariants(law, initial).omega1 >= 0.0 ? Region::A : Region::C;
  }
  if (initial.is_vacuum()) return Region::A;

  const State artificial{rho_tilde, 0.0};
  const auto gap = [&](double rho) {
    return reversed_curve(law, 2, initial, rho) - forward_curve(law, 1, artificial, rho);
  };
  const Landmarks marks = landmarks(law, rho_tilde);
  if (gap(marks.alpha.rho) >= 0.0) return Region::A;
  if (gap(marks.beta.rho) <= 0.0) return Region::C;
  if (gap(initial.rho) >= 0.0) return Region::B;
  if (eigenvalues(law, initial).lambda2 >= 0.0) return Region::B;
  return gap(stationary_shock_partner(law, initial)) < 0.0 ? Region::B : Region::C;
}

BoundaryTrace boundary_trace(const GasLaw& law, const State& initial, double rho_tilde) {
  if (!(rho_tilde >= 0.0) || !std::isfinite(rho_tilde)) {
    throw DomainError("artificial density must be finite and non-negative");
  }
  const RiemannSolution fan = solve_riemann(law, State{rho_tilde, 0.0}, initial);
  BoundaryTrace out{sample(fan, 0.0), TraceRegime::Unperturbed, Region::B, SonicClass::Subsonic,
                    fan};
  out.character = classify(law, out.trace);
  if (out.character == SonicClass::Supersonic && eigenvalues(law, out.trace).lambda1 > 0.0) {
    throw ConsistencyError("boundary trace is supersonic inflow");
  }
  out.regime = out.trace == initial ? TraceRegime::Unperturbed : regime_of(out.character);

  out.region = classify_region(law, initial, rho_tilde);
  const auto& w2 = out.fan.wave2;
  if (w2.kind == WaveKind::Shock && std::abs(w2.speed_lo) <= 1e-9 * (1.0 + std::abs(initial.u)) &&
      out.region != Region::A) {
    out.region = Region::J;
  }
  if (!allowed(out.region, out.character)) {
    throw ConsistencyError(std::string("region ") + to_string(out.region) +
                           " inconsistent with trace type " + to_string(out.character));
  }
  return out;
}

double r_star(const GasLaw& law, const State& s) {
  if (s.is_vacuum()) throw DomainError("artificial density undefined at vacuum");
  const double theta = law.theta();
  if (s.u >= 0.0) return std::pow(std::pow(s.rho, theta) + s.u / law.a_gamma(), 1.0 / theta);
  const auto residual = [&](double r) { return s.u + hugoniot_jump(law, s.rho, r); };
  double lo = s.rho * 1e-12;
  double f_lo = residual(lo);
  for (int i = 0; f_lo < 0.0; ++i) {
    if (i > 20 || lo < 1e-290) throw NoConvergence("could not bracket r_star");
    lo *= 1e-12;
    f_lo = residual(lo);
  }
  return brent_root(residual, lo, s.rho, f_lo, s.u);
}

Eigen::Vector2d r_star_gradient(const GasLaw& law, const State& s) {
  if (s.is_vacuum()) throw DomainError("artificial density undefined at vacuum");
  const double theta = law.theta();
  double d_rho = 0.0;  // at fixed u
  double d_u = 0.0;
  const double small_u = 1e-7 * law.sound_speed(s.rho);
  if (s.u >= -small_u) {
    const double x = std::pow(s.rho, theta) + s.u / law.a_gamma();
    const double x_pow = std::pow(x, 1.0 / theta - 1.0);
    d_rho = x_pow * std::pow(s.rho, theta - 1.0);
    d_u = x_pow / (theta * law.a_gamma());
  } else {
    const double r = r_star(law, s);
    const double jump = hugoniot_jump(law, s.rho, r);
    const double f_r = hugoniot_jump_slope(law, s.rho, r, jump);
    const double f_rho = hugoniot_jump_slope(law, r, s.rho, jump);
    d_rho = -f_rho / f_r;
    d_u = -1.0 / f_r;
  }
  return {d_rho - d_u * s.u / s.rho, d_u / s.rho};
}

}  // namespace gasnet

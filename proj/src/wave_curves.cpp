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

#include "gasnet/wave_curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gasnet/errors.hpp"
#include "gasnet/roots.hpp"
#include "hugoniot.hpp"

namespace gasnet {
namespace {

using detail::hugoniot_jump;
using detail::hugoniot_jump_slope;
using detail::rarefaction_term;

void check_family(int family) {
  if (family != 1 && family != 2) throw DomainError("wave family must be 1 or 2");
}

State fan_state_family1(const GasLaw& law, double omega2, double xi) {
  const double w = std::max(0.0, (omega2 - xi) / (law.a_gamma() + law.sound_coefficient()));
  if (w == 0.0) return {0.0, 0.0};
  return {std::pow(w, 1.0 / law.theta()), omega2 - law.a_gamma() * w};
}

State fan_state_family2(const GasLaw& law, double omega1, double xi) {
  const double w = std::max(0.0, (xi - omega1) / (law.a_gamma() + law.sound_coefficient()));
  if (w == 0.0) return {0.0, 0.0};
  return {std::pow(w, 1.0 / law.theta()), omega1 + law.a_gamma() * w};
}

}  // namespace

const char* to_string(WaveKind kind) {
  switch (kind) {
    case WaveKind::None:
      return "none";
    case WaveKind::Shock:
      return "shock";
    case WaveKind::Rarefaction:
      return "rarefaction";
  }
  return "?";
}

double forward_curve(const GasLaw& law, int family, const State& s0, double rho) {
  check_family(family);
  if (rho < 0.0) throw VacuumEndpoint("wave curve queried at negative density");
  if (!(s0.rho > 0.0)) throw DomainError("forward wave curve needs a non-vacuum base state");
  if (family == 1) {
    if (rho <= s0.rho) return s0.u + rarefaction_term(law, s0.rho) - rarefaction_term(law, rho);
    return s0.u - hugoniot_jump(law, rho, s0.rho);
  }
  if (rho >= s0.rho) return s0.u - rarefaction_term(law, s0.rho) + rarefaction_term(law, rho);
  return s0.u - hugoniot_jump(law, rho, s0.rho);
}

double reversed_curve(const GasLaw& law, int family, const State& s, double rho0) {
  check_family(family);
  if (rho0 < 0.0) throw VacuumEndpoint("reversed wave curve queried at negative density");
  if (!(s.rho > 0.0)) throw DomainError("reversed wave curve needs a non-vacuum end state");
  if (family == 2) {
    if (rho0 <= s.rho) return s.u + rarefaction_term(law, rho0) - rarefaction_term(law, s.rho);
    return s.u + hugoniot_jump(law, s.rho, rho0);
  }
  if (rho0 >= s.rho) return s.u - rarefaction_term(law, rho0) + rarefaction_term(law, s.rho);
  return s.u + hugoniot_jump(law, s.rho, rho0);
}

double reversed_curve_slope(const GasLaw& law, int family, const State& s, double rho0) {
  check_family(family);
  if (!(rho0 > 0.0) || !(s.rho > 0.0)) {
    throw DomainError("reversed curve slope needs positive densities");
  }
  const double rarefaction_slope = law.sound_coefficient() * std::pow(rho0, law.theta() - 1.0);
  const double jump = hugoniot_jump(law, s.rho, rho0);
  if (family == 2) {
    if (rho0 <= s.rho || jump == 0.0) return rarefaction_slope;
    return hugoniot_jump_slope(law, s.rho, rho0, jump);
  }
  if (rho0 >= s.rho || jump == 0.0) return -rarefaction_slope;
  return hugoniot_jump_slope(law, s.rho, rho0, jump);
}

double shock_speed(const State& a, const State& b) {
  return (a.momentum() - b.momentum()) / (a.rho - b.rho);
}

RiemannSolution solve_riemann(const GasLaw& law, const State& left, const State& right) {
  RiemannSolution sol{law, left, left, right, {}, {}, false, 0.0, 0.0};
  sol.wave1.family = 1;
  sol.wave2.family = 2;
  const auto set_none = [](WaveDescriptor& w, double speed) {
    w.kind = WaveKind::None;
    w.speed_lo = w.speed_hi = speed;
  };

  if (left == right) {
    const auto speeds = eigenvalues(law, left);
    set_none(sol.wave1, speeds.lambda1);
    set_none(sol.wave2, speeds.lambda2);
    return sol;
  }

  const auto inv_l = riemann_invariants(law, left);
  const auto inv_r = riemann_invariants(law, right);

  if (left.is_vacuum()) {
    sol.mid = {0.0, 0.0};
    set_none(sol.wave1, inv_r.omega1);
    sol.wave2 = {2, WaveKind::Rarefaction, inv_r.omega1, eigenvalues(law, right).lambda2};
    return sol;
  }
  if (right.is_vacuum()) {
    sol.mid = {0.0, 0.0};
    sol.wave1 = {1, WaveKind::Rarefaction, eigenvalues(law, left).lambda1, inv_l.omega2};
    set_none(sol.wave2, inv_l.omega2);
    return sol;
  }

  const auto two_rarefactions_to_vacuum = [&] {
    sol.mid = {0.0, 0.0};
    sol.wave1 = {1, WaveKind::Rarefaction, eigenvalues(law, left).lambda1, inv_l.omega2};
    sol.wave2 = {2, WaveKind::Rarefaction, inv_r.omega1, eigenvalues(law, right).lambda2};
    sol.vacuum = true;
    sol.vacuum_lo = inv_l.omega2;
    sol.vacuum_hi = inv_r.omega1;
    return sol;
  };
  if (inv_l.omega2 <= inv_r.omega1) return two_rarefactions_to_vacuum();

  const auto mismatch = [&](double rho) {
    return forward_curve(law, 1, left, rho) - reversed_curve(law, 2, right, rho);
  };
  const double rho_max = std::max(left.rho, right.rho);
  double lo = std::min(left.rho, right.rho) * 1e-6;
  double f_lo = mismatch(lo);
  if (f_lo < 0.0) {
    lo = 0.0;
    f_lo = inv_l.omega2 - inv_r.omega1;
  }
  double hi = rho_max;
  double f_hi = mismatch(hi);
  for (int i = 0; f_hi > 0.0; ++i) {
    if (i > 200) throw NoConvergence("could not bracket the Riemann middle density");
    lo = hi;
    f_lo = f_hi;
    hi *= 4.0;
    f_hi = mismatch(hi);
  }
  const double rho_m = brent_root(mismatch, lo, hi, f_lo, f_hi);
  if (rho_m < 1e-12 * rho_max) return two_rarefactions_to_vacuum();

  const double u1 = forward_curve(law, 1, left, rho_m);
  const double u2 = reversed_curve(law, 2, right, rho_m);
  if (std::abs(u1 - u2) > 1e-10 * std::max(1.0, std::abs(u1))) {
    throw NoConvergence("Riemann middle state residual " + std::to_string(u1 - u2));
  }
  sol.mid = {rho_m, 0.5 * (u1 + u2)};

  if (rho_m < left.rho) {
    sol.wave1 = {1, WaveKind::Rarefaction, eigenvalues(law, left).lambda1,
                 eigenvalues(law, sol.mid).lambda1};
  } else if (rho_m > left.rho) {
    const double s = shock_speed(left, sol.mid);
    sol.wave1 = {1, WaveKind::Shock, s, s};
  } else {
    set_none(sol.wave1, eigenvalues(law, left).lambda1);
  }
  if (rho_m > right.rho) {
    const double s = shock_speed(sol.mid, right);
    sol.wave2 = {2, WaveKind::Shock, s, s};
  } else if (rho_m < right.rho) {
    sol.wave2 = {2, WaveKind::Rarefaction, eigenvalues(law, sol.mid).lambda2,
                 eigenvalues(law, right).lambda2};
  } else {
    set_none(sol.wave2, eigenvalues(law, right).lambda2);
  }
  return sol;
}

State sample(const RiemannSolution& sol, double xi) {
  const GasLaw& law = sol.law;
  switch (sol.wave1.kind) {
    case WaveKind::Shock:
      if (xi < sol.wave1.speed_lo) return sol.left;
      break;
    case WaveKind::Rarefaction:
      if (xi < sol.wave1.speed_lo) return sol.left;
      if (xi < sol.wave1.speed_hi) {
        return fan_state_family1(law, riemann_invariants(law, sol.left).omega2, xi);
      }
      break;
    case WaveKind::None:
      break;
  }
  if (sol.vacuum && xi < sol.vacuum_hi) return {0.0, 0.0};
  switch (sol.wave2.kind) {
    case WaveKind::Shock:
      return xi < sol.wave2.speed_lo ? sol.mid : sol.right;
    case WaveKind::Rarefaction:
      if (xi < sol.wave2.speed_lo) return sol.mid;
      if (xi < sol.wave2.speed_hi) {
        return fan_state_family2(law, riemann_invariants(law, sol.right).omega1, xi);
      }
      return sol.right;
    case WaveKind::None:
      break;
  }
  return xi < sol.wave2.speed_lo ? sol.mid : sol.right;
}

}  // namespace gasnet

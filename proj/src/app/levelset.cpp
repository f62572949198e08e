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

#include "gasnet/app/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gasnet/errors.hpp"
#include "gasnet/half_riemann.hpp"
#include "gasnet/roots.hpp"
#include "gasnet/wave_curves.hpp"

namespace gasnet::app {
namespace {

std::vector<double> density_grid(double lo, double hi, int samples,
                                 std::initializer_list<double> extra) {
  std::vector<double> grid;
  for (int i = 0; i < samples; ++i) {
    grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1));
  }
  for (double x : extra) {
    if (x > 0.0) grid.push_back(x);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

// Level set of q, even in u and increasing in |u|, through the base state.
// Solves q(rho, u) = q(base) for u >= 0 at each scanned density.
LevelCurve even_curve(const State& base, const std::string& name,
                      const std::function<double(double, double)>& q, double rho_min,
                      double rho_max, int samples) {
  LevelCurve curve;
  curve.quantity = name;
  const double level = q(base.rho, base.u);
  const double speed = std::abs(base.u);
  // q(rho, 0) increases in rho, so the set ends where q(rho, 0) = level.
  const auto at_rest = [&](double r) { return q(r, 0.0) - level; };
  double turning = std::abs(base.u) == 0.0 ? base.rho : 0.0;
  if (turning == 0.0) {
    double hi = base.rho;
    double f_hi = at_rest(hi);
    for (int i = 0; f_hi < 0.0 && i < 200; ++i) {
      hi *= 2.0;
      f_hi = at_rest(hi);
    }
    turning = brent_root(at_rest, base.rho, hi, at_rest(base.rho), f_hi);
  }
  curve.turning_rho = turning;
  curve.bounded = true;
  for (double r : density_grid(rho_min, std::min(rho_max, turning), samples, {base.rho, turning})) {
    if (r > turning) continue;
    double u = 0.0;
    if (r == base.rho) {
      u = speed;
    } else if (r != turning) {
      const auto f = [&](double v) { return q(r, v) - level; };
      const double f0 = f(0.0);
      if (f0 > 0.0) continue;
      double hi = std::max(1.0, speed);
      double f_hi = f(hi);
      for (int i = 0; f_hi < 0.0 && i < 200; ++i) {
        hi *= 2.0;
        f_hi = f(hi);
      }
      u = brent_root(f, 0.0, hi, f0, f_hi);
    }
    curve.upper.emplace_back(r, r * u);
    curve.lower.emplace_back(r, -r * u);
  }
  return curve;
}

}  // namespace

LevelCurve level_curve(const GasLaw& law, const State& base, const std::string& quantity,
                       double rho_min, double rho_max, int samples) {
  if (base.is_vacuum() || classify(law, base) != SonicClass::Subsonic) {
    throw InputError("levelset.base_state: must be subsonic");
  }
  if (!(rho_max > rho_min) || !(rho_min > 0.0) || samples < 2) {
    throw InputError("levelset.range: needs 0 < rho_min < rho_max and at least 2 samples");
  }
  const double kappa = law.kappa();
  const double gamma = law.gamma();
  if (quantity == "momentum_flux") {
    return even_curve(base, quantity,
                      [&](double r, double u) { return r * u * u + kappa * std::pow(r, gamma); },
                      rho_min, rho_max, samples);
  }
  if (quantity == "bernoulli") {
    return even_curve(base, quantity,
                      [&](double r, double u) {
                        return 0.5 * u * u + kappa / (gamma - 1.0) * std::pow(r, gamma - 1.0);
                      },
                      rho_min, rho_max, samples);
  }
  if (quantity == "pressure") {
    // The pressure fixes rho; the set is the vertical line through the base.
    LevelCurve curve;
    curve.quantity = quantity;
    const double span = 2.0 * law.sound_speed(base.rho) * base.rho;
    const double m0 = std::abs(base.momentum());
    std::vector<double> moments;
    for (int i = 0; i < samples; ++i) {
      moments.push_back(span * static_cast<double>(i) / static_cast<double>(samples - 1));
    }
    moments.push_back(m0);
    std::sort(moments.begin(), moments.end());
    moments.erase(std::unique(moments.begin(), moments.end()), moments.end());
    for (double m : moments) {
      curve.upper.emplace_back(base.rho, m);
      curve.lower.emplace_back(base.rho, -m);
    }
    curve.bounded = false;
    return curve;
  }
  if (quantity == "artificial_density") {
    // Traces attainable from (rho*, 0) with rho* = R_*(base): the 1-wave
    // curve through (rho*, 0).
    LevelCurve curve;
    curve.quantity = quantity;
    const double rho_star = r_star(law, base);
    const State rest{rho_star, 0.0};
    for (double r : density_grid(rho_min, rho_max, samples, {base.rho, rho_star})) {
      const double u = r == base.rho ? base.u : forward_curve(law, 1, rest, r);
      curve.upper.emplace_back(r, r * u);
    }
    curve.bounded = false;
    return curve;
  }
  throw InputError("levelset.quantities: unknown quantity '" + quantity + "'");
}

}  // namespace gasnet::app

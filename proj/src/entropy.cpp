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

#include "gasnet/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gasnet/quadrature.hpp"

namespace gasnet {

EntropyGenerator EntropyGenerator::constant_one() {
  return {"one", [](double) { return 1.0; }, [](double) { return 0.0; }, true, {}};
}

EntropyGenerator EntropyGenerator::energy() {
  return {"energy", [](double v) { return 0.5 * v * v; }, [](double v) { return v; }, true, {}};
}

EntropyGenerator EntropyGenerator::square() {
  return {"v^2", [](double v) { return v * v; }, [](double v) { return 2.0 * v; }, true, {}};
}

EntropyGenerator EntropyGenerator::invariant_band(double omega_m) {
  auto pos = [](double x) { return x > 0.0 ? x : 0.0; };
  return {"S_M(" + std::to_string(omega_m) + ")",
          [=](double v) {
            const double lo = pos(-omega_m - v);
            const double hi = pos(v - omega_m);
            return lo * lo + hi * hi;
          },
          [=](double v) { return -2.0 * pos(-omega_m - v) + 2.0 * pos(v - omega_m); },
          true,
          {-omega_m, omega_m}};
}

EntropyGenerator EntropyGenerator::cosh_like(double scale) {
  return {"cosh(v/" + std::to_string(scale) + ")-1",
          [=](double v) { return std::cosh(v / scale) - 1.0; },
          [=](double v) { return std::sinh(v / scale) / scale; },
          true,
          {}};
}

bool symmetric_on_samples(const EntropyGenerator& gen, double range, int samples,
                          double rel_tol) {
  for (int i = 1; i <= samples; ++i) {
    const double v = range * i / samples;
    const double a = gen.s(v);
    const double b = gen.s(-v);
    if (std::abs(a - b) > rel_tol * std::max({1.0, std::abs(a), std::abs(b)})) return false;
  }
  return true;
}

EntropyPair entropy_pair(const GasLaw& law, const EntropyGenerator& gen, const State& s) {
  if (s.rho == 0.0) return {0.0, 0.0};
  const double width = law.a_gamma() * std::pow(s.rho, law.theta());
  const double theta = law.theta();
  std::vector<double> cuts;
  cuts.reserve(gen.kinks.size());
  for (double k : gen.kinks) cuts.push_back((k - s.u) / width);

  const double eta = integrate_power_weight(
      [&](double z) { return gen.s(s.u + width * z); }, law.lambda(), -1.0, 1.0, cuts);
  // Split the flux weight (u + theta w z) so each part converges on its own
  // scale; the odd part cancels exactly at u = 0 for symmetric S.
  const double odd = integrate_power_weight(
      [&](double z) { return z * gen.s(s.u + width * z); }, law.lambda(), -1.0, 1.0, cuts);
  const double norm = s.rho / law.j_lambda();
  return {norm * eta, norm * (s.u * eta + theta * width * odd)};
}

}  // namespace gasnet

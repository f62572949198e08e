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

#include <algorithm>
#include <cmath>
#include <limits>

#include "gasnet/gas_law.hpp"

namespace gasnet::detail {

// sqrt(kappa (a^g - b^g)(a - b) / (a b)); symmetric, zero on the diagonal.
inline double hugoniot_jump(const GasLaw& law, double a, double b) {
  if (a == b) return 0.0;
  if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
  const double g = law.gamma();
  const double q = law.kappa() * (std::pow(a, g) - std::pow(b, g)) * (a - b) / (a * b);
  return std::sqrt(std::max(q, 0.0));
}

// d/db hugoniot_jump(a, b) for a != b, given jump = hugoniot_jump(a, b) > 0.
inline double hugoniot_jump_slope(const GasLaw& law, double a, double b, double jump) {
  const double g = law.gamma();
  const double bracket =
      a / b * (std::pow(b, g) - std::pow(a, g)) + g * std::pow(b, g - 1.0) * (b - a);
  return law.kappa() * bracket / (2.0 * b * a * jump);
}

inline double rarefaction_term(const GasLaw& law, double rho) {
  return rho > 0.0 ? law.a_gamma() * std::pow(rho, law.theta()) : 0.0;
}

}  // namespace gasnet::detail

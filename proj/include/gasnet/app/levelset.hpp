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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gasnet/gas_law.hpp"

namespace gasnet::app {

/// Points (rho, rho u) of one level set through a base state.
struct LevelCurve {
  std::string quantity;
  /// Branch with u >= 0 (or the single branch of artificial_density).
  std::vector<Eigen::Vector2d> upper;
  /// Mirror image (rho, -rho u) of `upper`; empty for artificial_density.
  std::vector<Eigen::Vector2d> lower;
  /// The set has a finite extent in rho and momentum.
  bool bounded = false;
  /// Largest density on the set when it is bounded in rho.
  std::optional<double> turning_rho;
};

/// Known quantities: pressure, momentum_flux, bernoulli, artificial_density.
/// The density scan covers [rho_min, rho_max] with `samples` points plus the
/// base density and the turning density. Throws InputError for an unknown
/// quantity or a base state that is not subsonic.
LevelCurve level_curve(const GasLaw& law, const State& base, const std::string& quantity,
                       double rho_min, double rho_max, int samples);

}  // namespace gasnet::app

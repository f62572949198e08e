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

#include <cmath>
#include <functional>
#include <limits>

namespace gasnet {

struct RootOptions {
  /// Absolute x tolerance; the effective tolerance also includes
  /// 2 eps |x| so that zero requests machine precision.
  double x_tol = 0.0;
  int max_iterations = 200;
};

/// Brent's method on a bracket with f(a) and f(b) of opposite sign (or one
/// of them zero). Throws NoConvergence if the bracket is invalid.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  const RootOptions& options = {});

/// Same, reusing already computed end values.
double brent_root(const std::function<double(double)>& f, double a, double b, double fa,
                  double fb, const RootOptions& options = {});

}  // namespace gasnet

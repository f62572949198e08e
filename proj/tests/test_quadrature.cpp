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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "gasnet/errors.hpp"
#include "gasnet/quadrature.hpp"
#include "gasnet/roots.hpp"
#include "oracles.hpp"

using namespace gasnet;

TEST_CASE("Gauss-Jacobi rules integrate polynomials exactly") {
  for (double alpha : {0.0, 0.5, 1.7}) {
    const double beta = alpha;
    const int n = 8;
    const QuadratureRule& rule = gauss_jacobi(n, alpha, beta);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    for (int degree = 0; degree < 2 * n; ++degree) {
      double q = 0.0;
      for (int i = 0; i < n; ++i) q += rule.weights[i] * std::pow(rule.nodes[i], degree);
      const double exact = oracle::integrate(
          [&](double x) { return std::pow(1.0 - x, alpha) * std::pow(1.0 + x, beta) * std::pow(x, degree); },
          -1.0, 1.0);
      CHECK(q == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("Gauss-Legendre nodes are sorted and symmetric") {
  const QuadratureRule& rule = gauss_legendre(16);
  for (int i = 0; i < 16; ++i) {
    CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[15 - i]).epsilon(1e-14).scale(1.0));
    CHECK(rule.weights[i] > 0.0);
    if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
  }
}

TEST_CASE("power weight integration") {
  for (double lambda : {0.25, 0.5, 2.0, 4.5}) {
    const auto f = [](double z) { return std::exp(z) * std::cos(3.0 * z); };
    const double exact =
        oracle::integrate([&](double z) { return f(z) * std::pow(1.0 - z * z, lambda); }, -1.0, 1.0);
    CHECK(integrate_power_weight(f, lambda) == doctest::Approx(exact).epsilon(1e-11));

    const double half =
        oracle::integrate([&](double z) { return f(z) * std::pow(1.0 - z * z, lambda); }, 0.0, 1.0);
    CHECK(integrate_power_weight(f, lambda, 0.0, 1.0) == doctest::Approx(half).epsilon(1e-11));

    const double inner =
        oracle::integrate([&](double z) { return f(z) * std::pow(1.0 - z * z, lambda); }, -0.3, 0.6);
    CHECK(integrate_power_weight(f, lambda, -0.3, 0.6) == doctest::Approx(inner).epsilon(1e-11));
  }
}

TEST_CASE("breakpoints resolve kinks") {
  const auto kink = [](double z) { return std::abs(z - 0.2); };
  const double exact = oracle::integrate([](double z) { return std::abs(z - 0.2) * (1.0 - z * z); }, -1.0, 0.2) +
                       oracle::integrate([](double z) { return std::abs(z - 0.2) * (1.0 - z * z); }, 0.2, 1.0);
  const std::vector<double> cuts{0.2};
  CHECK(integrate_power_weight(kink, 1.0, -1.0, 1.0, cuts) == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("a jump without a breakpoint does not converge") {
  const auto step = [](double z) { return z < 0.1234567 ? 0.0 : 1.0; };
  WeightedIntegralOptions tight;
  tight.rel_tol = 1e-13;
  CHECK_THROWS_AS(integrate_power_weight(step, 0.5, -1.0, 1.0, {}, tight), NonConvergedQuadrature);
}

TEST_CASE("empty ranges integrate to zero") {
  const auto one = [](double) { return 1.0; };
  CHECK(integrate_power_weight(one, 1.0, 0.5, 0.5) == 0.0);
  CHECK(integrate_composite(one, 1.0, 1.0, 4) == 0.0);
}

TEST_CASE("composite Gauss-Legendre") {
  const auto f = [](double x) { return std::exp(-x * x); };
  CHECK(integrate_composite(f, -6.0, 6.0, 24) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(integrate_composite([](double x) { return x * x * x; }, 0.0, 2.0, 1, 2) ==
        doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("Brent root finder") {
  const double r = brent_root([](double x) { return std::cos(x) - x; }, 0.0, 1.0);
  CHECK(std::abs(std::cos(r) - r) <= 4e-16);
  CHECK(brent_root([](double x) { return x * x * x - 8.0; }, 0.0, 5.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(brent_root([](double x) { return x; }, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(brent_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), NoConvergence);

  oracle::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const double root = rng.uniform(-3.0, 3.0);
    const auto f = [&](double x) { return std::tanh(x - root) + 0.1 * (x - root); };
    const double found = brent_root(f, -10.0, 10.0);
    CHECK(found == doctest::Approx(oracle::bisect(f, -10.0, 10.0)).epsilon(1e-14).scale(1.0));
  }
}

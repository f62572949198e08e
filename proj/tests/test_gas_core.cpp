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

#include <doctest.h>

#include "gasnet/entropy.hpp"
#include "gasnet/errors.hpp"
#include "gasnet/gas_law.hpp"
#include "oracles.hpp"

using namespace gasnet;

namespace {
const GasLaw kShallow(5.0, 2.0);
const GasLaw kAir(1.0, 1.4);
}  // namespace

TEST_CASE("gas law constants match their definitions") {
  for (double gamma : {1.2, 1.4, 2.0, 2.8}) {
    const GasLaw law(1.7, gamma);
    CHECK(law.theta() == doctest::Approx((gamma - 1.0) / 2.0).epsilon(1e-14));
    CHECK(law.lambda() == doctest::Approx(1.0 / (gamma - 1.0) - 0.5).epsilon(1e-14));
    CHECK(law.a_gamma() == doctest::Approx(2.0 * std::sqrt(gamma * 1.7) / (gamma - 1.0)).epsilon(1e-14));
    const double lambda = law.lambda();
    const double j = oracle::integrate([&](double z) { return std::pow(1.0 - z * z, lambda); }, -1.0, 1.0);
    CHECK(law.j_lambda() == doctest::Approx(j).epsilon(1e-12));
    CHECK(law.lambda() > 0.0);
  }
}

TEST_CASE("Maxwellian normalisation integrates chi to rho") {
  for (const GasLaw& law : {kShallow, kAir, GasLaw(2.0, 2.8)}) {
    for (double rho : {0.3, 1.0, 4.0}) {
      const double w = law.a_gamma() * std::pow(rho, law.theta());
      const double mass = oracle::integrate(
          [&](double xi) {
            return law.c_gamma_kappa() * std::pow(std::max(0.0, w * w - xi * xi), law.lambda());
          },
          -w, w);
      CHECK(mass == doctest::Approx(rho).epsilon(1e-11));
    }
  }
}

TEST_CASE("gas law rejects parameters outside the domain") {
  CHECK_THROWS_AS(GasLaw(0.0, 2.0), DomainError);
  CHECK_THROWS_AS(GasLaw(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(GasLaw(1.0, 3.0), DomainError);
  CHECK_THROWS_AS(GasLaw(-1.0, 1.5), DomainError);
}

TEST_CASE("state construction canonicalises the vacuum") {
  CHECK(State::make(1e-301, 3.0) == State{0.0, 0.0});
  CHECK_THROWS_AS(State::make(-1.0, 0.0), DomainError);
  CHECK_THROWS_AS(State::make(NAN, 0.0), DomainError);
  CHECK_THROWS_AS(State::from_conserved(0.0, 1.0), DomainError);
  const State s = State::from_conserved(2.0, -3.0);
  CHECK(s.u == -1.5);
  CHECK(s.momentum() == -3.0);
}

TEST_CASE("eigenvalues") {
  const auto vac = eigenvalues(kShallow, {0.0, 0.0});
  CHECK(vac.lambda1 == 0.0);
  CHECK(vac.lambda2 == 0.0);
  const auto rest = eigenvalues(kShallow, {1.0, 0.0});
  CHECK(rest.lambda1 == doctest::Approx(-std::sqrt(10.0)).epsilon(1e-14));
  CHECK(rest.lambda2 == doctest::Approx(std::sqrt(10.0)).epsilon(1e-14));
  const auto moving = eigenvalues(kAir, {1.0, 0.5});
  CHECK(moving.lambda2 - moving.lambda1 == doctest::Approx(2.0 * std::sqrt(1.4)).epsilon(1e-14));
}

TEST_CASE("Riemann invariants and their inverse") {
  const auto vac = riemann_invariants(kShallow, {0.0, 0.0});
  CHECK(vac.omega1 == 0.0);
  CHECK(vac.omega2 == 0.0);
  const auto rest = riemann_invariants(kShallow, {1.0, 0.0});
  CHECK(rest.omega1 == doctest::Approx(-2.0 * std::sqrt(10.0)).epsilon(1e-14));
  CHECK(rest.omega2 == doctest::Approx(2.0 * std::sqrt(10.0)).epsilon(1e-14));

  oracle::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const GasLaw& law = i % 2 ? kShallow : kAir;
    const State s{rng.uniform(1e-3, 10.0), rng.uniform(-10.0, 10.0)};
    const auto inv = riemann_invariants(law, s);
    const State back = state_from_invariants(law, inv.omega1, inv.omega2);
    CHECK(back.rho == doctest::Approx(s.rho).epsilon(1e-12));
    CHECK(back.u == doctest::Approx(s.u).epsilon(1e-12).scale(1.0));
    CHECK(inv.omega1 < inv.omega2);
    const auto ev = eigenvalues(law, s);
    CHECK(ev.lambda1 < ev.lambda2);
    CHECK(law.a_gamma() / law.sound_coefficient() ==
          doctest::Approx(2.0 / (law.gamma() - 1.0)).epsilon(1e-14));
  }
}

TEST_CASE("sonic classification") {
  CHECK(classify(kShallow, {1.0, 0.0}) == SonicClass::Subsonic);
  CHECK(classify(kShallow, {1.0, std::sqrt(10.0)}) == SonicClass::Sonic1);
  CHECK(classify(kShallow, {1.0, -std::sqrt(10.0)}) == SonicClass::Sonic2);
  CHECK(classify(kShallow, {1.0, 4.0}) == SonicClass::Supersonic);
  CHECK(classify(kShallow, {1.0, -4.0}) == SonicClass::Supersonic);
  CHECK(classify(kShallow, {0.0, 0.0}) == SonicClass::Sonic1);
}

TEST_CASE("energy pair") {
  const auto rest = energy_pair(kShallow, {1.0, 0.0});
  CHECK(rest.eta == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(rest.flux == 0.0);
  CHECK(energy_pair(kShallow, {1.0, -1.0}).flux == doctest::Approx(-10.5).epsilon(1e-15));
  oracle::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const double rho = rng.uniform(0.1, 5.0);
    const double u = rng.uniform(-5.0, 5.0);
    CHECK(energy_pair(kAir, {rho, -u}).flux == doctest::Approx(-energy_pair(kAir, {rho, u}).flux));
  }
}

TEST_CASE("energy gradient matches finite differences") {
  oracle::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const double rho = rng.uniform(0.2, 5.0);
    const double m = rng.uniform(-5.0, 5.0);
    const auto eta = [&](double r, double mom) {
      return energy_pair(kAir, State::from_conserved(r, mom)).eta;
    };
    const auto g = energy_gradient(kAir, State::from_conserved(rho, m));
    CHECK(g(0) == doctest::Approx(oracle::derivative([&](double r) { return eta(r, m); }, rho, 1e-5))
                      .epsilon(1e-7));
    CHECK(g(1) == doctest::Approx(oracle::derivative([&](double x) { return eta(rho, x); }, m, 1e-5))
                      .epsilon(1e-7));
  }
}

TEST_CASE("eigenvectors solve the flux Jacobian eigenproblem") {
  const State s{1.3, 0.4};
  for (int family : {1, 2}) {
    const Eigen::Vector2d r = eigenvector(kShallow, s, family);
    const double h = 1e-6;
    const Eigen::Vector2d u = s.conserved();
    const auto f = [&](const Eigen::Vector2d& c) {
      return flux(kShallow, State::from_conserved(c(0), c(1)));
    };
    const Eigen::Vector2d jr = (f(u + h * r) - f(u - h * r)) / (2.0 * h);
    const auto ev = eigenvalues(kShallow, s);
    const double lambda = family == 1 ? ev.lambda1 : ev.lambda2;
    CHECK(jr(0) == doctest::Approx(lambda * r(0)).epsilon(1e-7));
    CHECK(jr(1) == doctest::Approx(lambda * r(1)).epsilon(1e-7));
  }
}

TEST_CASE("coupling quantities") {
  CHECK(pressure(kShallow, {2.0, 1.0}) == doctest::Approx(20.0));
  CHECK(momentum_flux(kShallow, {2.0, 1.0}) == doctest::Approx(22.0));
  CHECK(bernoulli(kShallow, {2.0, 1.0}) == doctest::Approx(0.5 + 5.0 * 2.0));
  CHECK(enthalpy(kShallow, {2.0, 1.0}) == doctest::Approx(0.5 + 10.0 * 2.0));
  const State vac{0.0, 0.0};
  CHECK(pressure(kShallow, vac) == 0.0);
  CHECK(momentum_flux(kShallow, vac) == 0.0);
  CHECK(bernoulli(kShallow, vac) == 0.0);
  CHECK(enthalpy(kShallow, vac) == 0.0);
}

TEST_CASE("reference traces equalise their coupling quantity") {
  const auto at = [](double rho, double mom) { return State{rho, mom / rho}; };
  CHECK(std::abs(bernoulli(kShallow, at(0.8518, -1.2670)) - bernoulli(kShallow, at(1.0356, 0.6335))) <=
        1e-3);
  CHECK(std::abs(momentum_flux(kShallow, at(0.8964, -1.1981)) -
                 momentum_flux(kShallow, at(1.0266, 0.5991))) <= 1e-3);
}

TEST_CASE("entropy pair by quadrature") {
  const auto one = EntropyGenerator::constant_one();
  const auto energy = EntropyGenerator::energy();
  CHECK(entropy_pair(kShallow, one, {1.7, 0.3}).eta == doctest::Approx(1.7).epsilon(1e-13));
  CHECK(entropy_pair(kShallow, energy, {0.0, 0.0}).eta == 0.0);
  CHECK(entropy_pair(kShallow, energy, {0.0, 0.0}).flux == 0.0);

  oracle::Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const GasLaw& law = i % 2 ? kShallow : kAir;
    const State s{std::exp(rng.uniform(std::log(1e-3), std::log(10.0))), rng.uniform(-10.0, 10.0)};
    const auto q = entropy_pair(law, energy, s);
    const auto exact = energy_pair(law, s);
    CHECK(oracle::close_rel(q.eta, exact.eta, 1e-10));
    CHECK(oracle::close_rel(q.flux, exact.flux, 1e-10, 1e-12 * exact.eta));
  }
}

TEST_CASE("symmetric generators have zero flux at rest") {
  oracle::Rng rng(19);
  for (const auto& gen : {EntropyGenerator::square(), EntropyGenerator::cosh_like(3.0),
                          EntropyGenerator::invariant_band(2.0)}) {
    CHECK(symmetric_on_samples(gen, 10.0));
    for (int i = 0; i < 20; ++i) {
      const double rho = rng.uniform(0.05, 5.0);
      CHECK(std::abs(entropy_pair(kShallow, gen, {rho, 0.0}).flux) <= 1e-12);
    }
  }
  const EntropyGenerator skew{"skew", [](double v) { return v * v + v; }, {}, false, {}};
  CHECK_FALSE(symmetric_on_samples(skew, 1.0));
}

TEST_CASE("entropy pair agrees with an independent quadrature") {
  const auto gen = EntropyGenerator::cosh_like(2.0);
  for (const State s : {State{0.7, 1.1}, State{2.5, -0.4}}) {
    const double w = kShallow.a_gamma() * std::pow(s.rho, kShallow.theta());
    const auto chi = [&](double v) {
      return kShallow.c_gamma_kappa() *
             std::pow(std::max(0.0, w * w - (v - s.u) * (v - s.u)), kShallow.lambda());
    };
    const double eta = oracle::integrate([&](double v) { return chi(v) * gen.s(v); }, s.u - w, s.u + w);
    const double g = oracle::integrate(
        [&](double v) {
          return ((1.0 - kShallow.theta()) * s.u + kShallow.theta() * v) * chi(v) * gen.s(v);
        },
        s.u - w, s.u + w);
    const auto q = entropy_pair(kShallow, gen, s);
    CHECK(q.eta == doctest::Approx(eta).epsilon(1e-10));
    CHECK(q.flux == doctest::Approx(g).epsilon(1e-10));
  }
}

TEST_CASE("invariant band entropy vanishes inside the band and is nonnegative") {
  const auto band = EntropyGenerator::invariant_band(3.0);
  oracle::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const State s{rng.uniform(0.01, 3.0), rng.uniform(-4.0, 4.0)};
    const auto inv = riemann_invariants(kAir, s);
    const double eta = entropy_pair(kAir, band, s).eta;
    CHECK(eta >= 0.0);
    if (inv.omega1 >= -3.0 && inv.omega2 <= 3.0) CHECK(eta == doctest::Approx(0.0));
    else CHECK(eta > 0.0);
  }
}

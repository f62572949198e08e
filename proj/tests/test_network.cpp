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
#include "gasnet/network.hpp"
#include "oracles.hpp"

using namespace gasnet;

namespace {

const GasLaw kShallow(5.0, 2.0);

JunctionProblem table1() {
  JunctionProblem p;
  p.law = kShallow;
  p.areas = {1.0, 1.0, 1.0};
  p.initial = {State::from_conserved(1.0, -1.0), State::from_conserved(1.0, 0.5),
               State::from_conserved(1.0, 0.5)};
  return p;
}

SimConfig config(double t_end) {
  SimConfig c;
  c.cfl = 0.5;
  c.t_end = t_end;
  return c;
}

// L1 density error of the network against the exact self-similar solution.
double l1_error(const Network& net, const JunctionSolution& exact, double t) {
  double err = 0.0;
  for (std::size_t k = 0; k < net.pipes.size(); ++k) {
    const PipeGrid& pipe = net.pipes[k];
    for (int i = 0; i < pipe.size(); ++i) {
      const State s = sample(exact.boundary[k].fan, pipe.center(i) / t);
      err += pipe.area * pipe.dx() * std::abs(pipe.cells[static_cast<std::size_t>(i)](0) - s.rho);
    }
  }
  return err;
}

}  // namespace

TEST_CASE("constant states are preserved exactly") {
  JunctionProblem p;
  p.law = kShallow;
  p.areas = {1.0, 2.0, 0.5};
  p.initial = {{1.5, 0.0}, {1.5, 0.0}, {1.5, 0.0}};
  Network net = Network::from_problem(p, 50, 1.0);
  const Network start = net;
  for (int i = 0; i < 100; ++i) net = step(net, stable_dt(net, 0.9));
  for (std::size_t k = 0; k < net.pipes.size(); ++k) {
    for (int i = 0; i < net.pipes[k].size(); ++i) {
      CHECK(net.pipes[k].cells[static_cast<std::size_t>(i)] == start.pipes[k].cells[static_cast<std::size_t>(i)]);
    }
  }
  const auto report = simulate(start, config(0.1));
  CHECK(report.max_energy_increase == 0.0);
  for (double e : report.energy_budget) CHECK(e == report.energy_budget.front());
}

TEST_CASE("a single pipe against a wall conserves mass") {
  JunctionProblem p;
  p.law = kShallow;
  p.areas = {1.0};
  p.initial = {{1.0, -0.8}};
  Network net = Network::from_problem(p, 100, 1.0);
  oracle::Rng rng(601);
  for (auto& c : net.pipes[0].cells) c = Eigen::Vector2d(rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0));
  const auto report = simulate(net, config(0.2));
  CHECK(report.max_mass_defect <= 1e-12);
  for (const auto& rec : report.junction_log) CHECK(std::abs(rec.traces[0].momentum()) <= 1e-10);
  CHECK(report.max_energy_increase <= 1e-12);
}

TEST_CASE("junction traces follow the exact generalized Riemann solution") {
  const auto p = table1();
  const JunctionSolution exact = solve_junction(p);
  const auto report = simulate(Network::from_problem(p, 400, 1.0), config(0.05));
  REQUIRE(report.junction_log.size() > 10);
  for (std::size_t n = 10; n < report.junction_log.size(); ++n) {
    const auto& rec = report.junction_log[n];
    CHECK(*rec.rho_star == doctest::Approx(*exact.rho_star).epsilon(5e-3));
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(rec.traces[k].rho - exact.traces[k].rho) <= 5e-3);
      CHECK(std::abs(rec.traces[k].momentum() - exact.traces[k].momentum()) <= 5e-3);
    }
  }
  CHECK(report.max_mass_defect <= 1e-12);
  CHECK(report.invariant_excess <= 1e-6);
  CHECK(report.max_energy_increase <= 1e-12 * std::abs(report.energy_budget.front()));
}

TEST_CASE("invariant region bounds hold for random data") {
  oracle::Rng rng(607);
  for (int trial = 0; trial < 5; ++trial) {
    JunctionProblem p;
    p.law = trial % 2 ? GasLaw(1.0, 1.4) : kShallow;
    const int d = rng.integer(1, 4);
    for (int k = 0; k < d; ++k) {
      p.areas.push_back(rng.uniform(0.5, 2.0));
      p.initial.push_back({rng.uniform(0.2, 2.0), rng.uniform(-1.0, 1.0)});
    }
    Network net = Network::from_problem(p, 60, 1.0);
    for (auto& pipe : net.pipes) {
      for (auto& c : pipe.cells) {
        const double rho = rng.uniform(0.2, 2.0);
        c = Eigen::Vector2d(rho, rho * rng.uniform(-1.0, 1.0));
      }
    }
    const auto report = simulate(net, config(0.3));
    CHECK(report.invariant_excess <= 1e-6);
    CHECK(report.max_mass_defect <= 1e-12);
  }
}

TEST_CASE("first-order convergence before boundary interaction") {
  const auto p = table1();
  const JunctionSolution exact = solve_junction(p);
  const double t = 0.05;
  const double coarse = l1_error(simulate(Network::from_problem(p, 200, 1.0), config(t)).final_state, exact, t);
  const double fine = l1_error(simulate(Network::from_problem(p, 400, 1.0), config(t)).final_state, exact, t);
  const double ratio = coarse / fine;
  CHECK(ratio >= 1.5);
  CHECK(ratio <= 2.5);
}

TEST_CASE("snapshots and logs") {
  SimConfig c = config(0.05);
  c.output_every = 0.025;
  const auto report = simulate(Network::from_problem(table1(), 40, 1.0), c);
  REQUIRE(report.snapshots.size() == 3);
  CHECK(report.snapshots[0].time == 0.0);
  CHECK(report.snapshots[1].time == doctest::Approx(0.025).epsilon(1e-14));
  CHECK(report.snapshots[2].time == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(report.snapshots[1].cells.size() == 3);
  CHECK(report.snapshots[1].cells[0].size() == 40);
  CHECK(report.junction_log.size() == static_cast<std::size_t>(report.steps));
}

TEST_CASE("step rejects time steps beyond the CFL bound") {
  const Network net = Network::from_problem(table1(), 20, 1.0);
  const double dt = stable_dt(net, 1.0);
  CHECK_NOTHROW(step(net, dt));
  CHECK_THROWS_AS(step(net, 1.5 * dt), CFLViolation);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Network::from_problem(table1(), 1, 1.0), DomainError);
  SimConfig bad;
  bad.cfl = 1.5;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  Network net = Network::from_problem(table1(), 10, 1.0);
  net.pipes[1].cells[3] = Eigen::Vector2d(-0.5, 0.0);
  CHECK_THROWS_AS(net.validate(), DomainError);
}

TEST_CASE("monitors") {
  const auto m = monitors(Network::from_problem(table1(), 10, 2.0));
  CHECK(m.total_mass == doctest::Approx(6.0).epsilon(1e-14));
  const double a = kShallow.a_gamma();
  CHECK(m.omega1_min == doctest::Approx(-1.0 - a).epsilon(1e-14));
  CHECK(m.omega2_max == doctest::Approx(0.5 + a).epsilon(1e-14));
}

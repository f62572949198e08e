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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "gasnet/app/commands.hpp"
#include "gasnet/app/levelset.hpp"
#include "gasnet/app/problem_file.hpp"
#include "gasnet/errors.hpp"

using namespace gasnet;
using namespace gasnet::app;

namespace {

const std::string kData = GASNET_DATA_DIR;

std::string parse_error(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("gasnet_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("problem file parsing") {
  const ProblemFile pf = load_problem(kData + "/table1.json");
  REQUIRE(pf.junction.has_value());
  CHECK(pf.law.kappa() == 5.0);
  CHECK(pf.junction->initial[0].u == -1.0);
  CHECK(pf.junction->initial[1].momentum() == 0.5);
  REQUIRE(pf.simulation.has_value());
  CHECK(pf.simulation->cells == 400);
  CHECK_FALSE(pf.levelset.has_value());
}

TEST_CASE("parse errors name the offending field") {
  CHECK(parse_error("{").find("JSON") != std::string::npos);
  CHECK(parse_error(R"({"junction": {}})").find("gas") != std::string::npos);
  CHECK(parse_error(R"({"gas": {"kappa": 1, "gamma": 3.5}})").find("gas.gamma") != std::string::npos);
  CHECK(parse_error(R"({"gas": {"kappa": -1, "gamma": 2}})").find("gas.kappa") != std::string::npos);
  const std::string base = R"({"gas": {"kappa": 1, "gamma": 2}, "junction": )";
  CHECK(parse_error(base + R"({"areas": [1, 1], "initial": [[1, 0], [-1, 0]]}})").find("junction.initial[1][0]") !=
        std::string::npos);
  CHECK(parse_error(base + R"({"areas": [1, 1], "initial": [[1, 0], [0, 2]]}})").find("junction.initial[1][1]") !=
        std::string::npos);
  CHECK(parse_error(base + R"({"areas": [1, 0], "initial": [[1, 0], [1, 0]]}})").find("junction.areas[1]") !=
        std::string::npos);
  CHECK(parse_error(base + R"({"areas": [1], "initial": [[1, 0]], "coupling": "equal_density"}})")
            .find("junction.coupling") != std::string::npos);
  CHECK(parse_error(base + R"({"areas": [1], "initial": [[1, 0], [1, 0]]}})").find("junction.initial") !=
        std::string::npos);
  CHECK_THROWS_AS(load_problem(kData + "/missing.json"), InputError);
}

TEST_CASE("level sets through the base state") {
  const GasLaw law(1.0, 1.4);
  const State base{1.0, 0.0};
  for (const std::string q : {"pressure", "momentum_flux", "bernoulli", "artificial_density"}) {
    const LevelCurve c = level_curve(law, base, q, 0.05, 3.0, 200);
    REQUIRE_FALSE(c.upper.empty());
    double nearest = INFINITY;
    for (const auto& pt : c.upper) nearest = std::min(nearest, std::hypot(pt(0) - 1.0, pt(1)));
    CHECK(nearest <= 1e-10);
    if (q != "artificial_density") {
      REQUIRE(c.lower.size() == c.upper.size());
      for (std::size_t i = 0; i < c.upper.size(); ++i) {
        CHECK(std::abs(c.lower[i](0) - c.upper[i](0)) <= 1e-10);
        CHECK(std::abs(c.lower[i](1) + c.upper[i](1)) <= 1e-10);
      }
    }
  }
  CHECK(level_curve(law, base, "momentum_flux", 0.05, 3.0, 200).bounded);
  CHECK(level_curve(law, base, "bernoulli", 0.05, 3.0, 200).bounded);
  CHECK_FALSE(level_curve(law, base, "pressure", 0.05, 3.0, 200).bounded);
  CHECK_THROWS_AS(level_curve(law, base, "entropy", 0.05, 3.0, 200), InputError);
  CHECK_THROWS_AS(level_curve(law, {1.0, 5.0}, "bernoulli", 0.05, 3.0, 200), InputError);
}

TEST_CASE("level set points carry the base value") {
  const GasLaw law(1.0, 1.4);
  const State base{1.0, 0.0};
  const auto mf = level_curve(law, base, "momentum_flux", 0.05, 3.0, 100);
  for (const auto& pt : mf.upper) {
    CHECK(momentum_flux(law, State::from_conserved(pt(0), pt(1))) == doctest::Approx(momentum_flux(law, base)).epsilon(1e-10));
  }
  const auto be = level_curve(law, base, "bernoulli", 0.05, 3.0, 100);
  for (const auto& pt : be.upper) {
    CHECK(bernoulli(law, State::from_conserved(pt(0), pt(1))) == doctest::Approx(bernoulli(law, base)).epsilon(1e-10));
  }
  const auto ad = level_curve(law, base, "artificial_density", 0.05, 3.0, 100);
  for (const auto& pt : ad.upper) {
    const State s = State::from_conserved(pt(0), pt(1));
    if (classify(law, s) == SonicClass::Subsonic) CHECK(r_star(law, s) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("number formatting") {
  CHECK(fmt(0.0) == "0");
  CHECK(fmt(-0.0) == "0");
  CHECK(fmt(1.5) == "1.5");
  CHECK(fmt(1.0 / 3.0) == "0.3333333333");
}

TEST_CASE("solve command output and reference comparison") {
  std::ostringstream out;
  CHECK(cmd_solve(kData + "/table1.json", {}, out) == kOk);
  CHECK(out.str().find("reference traces: match") != std::string::npos);
  CHECK(out.str().find("reference wave types: match") != std::string::npos);

  std::ostringstream ep;
  CommandOptions opts;
  opts.coupling = "equal_pressure";
  CHECK(cmd_solve(kData + "/table1.json", opts, ep) == kOk);
  CHECK(ep.str().find("-0.375") != std::string::npos);

  std::ostringstream vac;
  CHECK(cmd_solve(kData + "/vacuum.json", {}, vac) == kOk);
  CHECK(vac.str().find("rho_star: 0") != std::string::npos);
}

TEST_CASE("compare command") {
  std::ostringstream out;
  CHECK(cmd_compare(kData + "/table1.json", {}, out) == kOk);
  CHECK(out.str().find("most dissipative: artificial_density") != std::string::npos);
}

TEST_CASE("CSV output is byte-stable") {
  const auto a = fresh_dir("a");
  const auto b = fresh_dir("b");
  for (const auto& dir : {a, b}) {
    CommandOptions opts;
    opts.out_dir = dir.string();
    std::ostringstream sink;
    CHECK(cmd_compare(kData + "/table1.json", opts, sink) == kOk);
    CHECK(cmd_levelset(kData + "/levelset.json", opts, sink) == kOk);
  }
  for (const char* name : {"compare.csv", "levelset.csv"}) {
    const std::string first = slurp(a / name);
    CHECK_FALSE(first.empty());
    CHECK(first == slurp(b / name));
  }
}

TEST_CASE("simulate command on constant data keeps snapshots constant") {
  const auto dir = fresh_dir("sim");
  CommandOptions opts;
  opts.out_dir = dir.string();
  std::ostringstream out;
  CHECK(cmd_simulate(kData + "/constant.json", opts, out) == kOk);
  std::ifstream csv(dir / "snapshots.csv");
  std::string line;
  std::getline(csv, line);
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    CHECK(line.find(",1.5,0") != std::string::npos);
  }
  CHECK(rows > 0);
}

TEST_CASE("exit codes") {
  std::ostringstream err;
  CHECK(run_guarded([] { return kOk; }, err) == kOk);
  CHECK(run_guarded([]() -> int { throw InputError("x"); }, err) == kInputError);
  CHECK(run_guarded([]() -> int { throw NoSubsonicSolution("x"); }, err) == kDomainError);
  CHECK(run_guarded([]() -> int { throw ConsistencyError("x"); }, err) == kInternalError);
  std::ostringstream out;
  CHECK(run_guarded([&] { return cmd_solve(kData + "/missing.json", {}, out); }, err) == kInputError);
  CommandOptions bad;
  bad.coupling = "equal_density";
  CHECK(run_guarded([&] { return cmd_solve(kData + "/table1.json", bad, out); }, err) == kInputError);
}

TEST_CASE("kinetic and euler commands") {
  std::ostringstream k;
  CHECK(cmd_kinetic(GasLaw(5.0, 2.0), {1.0}, {{0.0, 0.0}}, k) == kOk);
  CHECK(k.str().find("rho_star: 0") != std::string::npos);
  std::ostringstream e;
  CHECK(cmd_euler({1.0}, {{1.0, 0.0, 1.0}}, e) == kOk);
  CHECK(e.str().find("rho_star: 1") != std::string::npos);
  CHECK(e.str().find("theta_star: 1") != std::string::npos);
}

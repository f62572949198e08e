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

#include "gasnet/app/problem_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gasnet/errors.hpp"

namespace gasnet::app {
namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(path + key + ": missing field");
  return obj.at(key);
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) throw InputError(field + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError(field + ": must be finite");
  return x;
}

double positive(const json& v, const std::string& field) {
  const double x = number(v, field);
  if (!(x > 0.0)) throw InputError(field + ": must be positive");
  return x;
}

int positive_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw InputError(field + ": expected an integer");
  const auto x = v.get<long long>();
  if (x <= 0 || x > 100000000) throw InputError(field + ": must be a positive integer");
  return static_cast<int>(x);
}

// A (rho, rho u) pair checked against D.
State conserved_pair(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) throw InputError(field + ": expected [rho, momentum]");
  const double rho = number(v[0], field + "[0]");
  const double mom = number(v[1], field + "[1]");
  if (rho < 0.0) throw InputError(field + "[0]: density must be non-negative");
  if (rho == 0.0 && mom != 0.0) {
    throw InputError(field + "[1]: momentum must vanish at zero density");
  }
  return rho == 0.0 ? State{} : State{rho, mom / rho};
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("problem file: expected a JSON object");

  ProblemFile out;
  const json& gas = require(doc, "gas", "");
  const double kappa = positive(require(gas, "kappa", "gas."), "gas.kappa");
  const double gamma = number(require(gas, "gamma", "gas."), "gas.gamma");
  if (!(gamma > 1.0 && gamma < 3.0)) throw InputError("gas.gamma: must lie in (1, 3)");
  out.law = GasLaw(kappa, gamma);

  if (doc.contains("junction")) {
    const json& j = doc.at("junction");
    JunctionProblem jp;
    jp.law = out.law;
    const json& areas = require(j, "areas", "junction.");
    if (!areas.is_array() || areas.empty()) {
      throw InputError("junction.areas: expected a non-empty array");
    }
    for (std::size_t k = 0; k < areas.size(); ++k) {
      jp.areas.push_back(positive(areas[k], "junction.areas[" + std::to_string(k) + "]"));
    }
    const json& initial = require(j, "initial", "junction.");
    if (!initial.is_array()) throw InputError("junction.initial: expected an array");
    if (initial.size() != areas.size()) {
      throw InputError("junction.initial: expected " + std::to_string(areas.size()) +
                       " states, one per area");
    }
    for (std::size_t k = 0; k < initial.size(); ++k) {
      jp.initial.push_back(conserved_pair(initial[k], "junction.initial[" + std::to_string(k) + "]"));
    }
    if (j.contains("coupling")) {
      const json& c = j.at("coupling");
      if (!c.is_string()) throw InputError("junction.coupling: expected a string");
      const auto kind = coupling_from_string(c.get<std::string>());
      if (!kind) throw InputError("junction.coupling: unknown coupling '" + c.get<std::string>() + "'");
      jp.coupling = *kind;
    }
    out.junction = jp;
  }

  if (doc.contains("simulation")) {
    const json& s = doc.at("simulation");
    if (!s.is_object()) throw InputError("simulation: expected an object");
    SimulationSection sim;
    if (s.contains("cells")) sim.cells = positive_int(s.at("cells"), "simulation.cells");
    if (sim.cells < 2) throw InputError("simulation.cells: needs at least 2 cells");
    if (s.contains("length")) sim.length = positive(s.at("length"), "simulation.length");
    if (s.contains("cfl")) sim.cfl = positive(s.at("cfl"), "simulation.cfl");
    if (sim.cfl > 1.0) throw InputError("simulation.cfl: must not exceed 1");
    if (s.contains("t_end")) sim.t_end = number(s.at("t_end"), "simulation.t_end");
    if (sim.t_end < 0.0) throw InputError("simulation.t_end: must be non-negative");
    if (s.contains("output_every")) {
      sim.output_every = number(s.at("output_every"), "simulation.output_every");
      if (sim.output_every < 0.0) throw InputError("simulation.output_every: must be non-negative");
    }
    out.simulation = sim;
  }

  if (doc.contains("levelset")) {
    const json& l = doc.at("levelset");
    LevelsetSection ls;
    ls.base = conserved_pair(require(l, "base_state", "levelset."), "levelset.base_state");
    if (ls.base.is_vacuum()) throw InputError("levelset.base_state: must not be the vacuum");
    if (l.contains("quantities")) {
      const json& q = l.at("quantities");
      if (!q.is_array()) throw InputError("levelset.quantities: expected an array of names");
      for (std::size_t i = 0; i < q.size(); ++i) {
        const std::string field = "levelset.quantities[" + std::to_string(i) + "]";
        if (!q[i].is_string()) throw InputError(field + ": expected a string");
        ls.quantities.push_back(q[i].get<std::string>());
      }
    } else {
      ls.quantities = {"pressure", "momentum_flux", "bernoulli", "artificial_density"};
    }
    if (l.contains("range")) {
      const json& r = l.at("range");
      if (!r.is_array() || r.size() != 2) throw InputError("levelset.range: expected [rho_min, rho_max]");
      ls.rho_min = positive(r[0], "levelset.range[0]");
      ls.rho_max = positive(r[1], "levelset.range[1]");
      if (!(ls.rho_max > ls.rho_min)) throw InputError("levelset.range: rho_max must exceed rho_min");
    }
    if (l.contains("samples")) ls.samples = positive_int(l.at("samples"), "levelset.samples");
    if (ls.samples < 2) throw InputError("levelset.samples: needs at least 2 samples");
    out.levelset = ls;
  }
  return out;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace gasnet::app

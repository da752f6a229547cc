// Copyright 2026 The tqlocc Authors
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


#include "tqlocc/json_io.hpp"

#include <fstream>
#include <vector>

#include "tqlocc/error.hpp"

namespace tqlocc {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::Parse, what);
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    parse_error("complex numbers are written as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Matrix2 matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    parse_error("an operator is a 2x2 array of [re, im] pairs");
  Matrix2 m;
  for (int r = 0; r < 2; ++r) {
    if (!j[r].is_array() || j[r].size() != 2)
      parse_error("an operator is a 2x2 array of [re, im] pairs");
    for (int c = 0; c < 2; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Json optional_number(const std::optional<double>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

Json state_to_json(const PureState3& state) {
  Json amps = Json::array();
  for (const auto& z : state.amplitudes()) amps.push_back(complex_to_json(z));
  return Json{{"amplitudes", amps}};
}

PureState3 state_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("amplitudes") || !j["amplitudes"].is_array())
    parse_error("state must be an object with an \"amplitudes\" array");
  std::vector<Complex> raw;
  for (const auto& x : j["amplitudes"]) raw.push_back(complex_from_json(x));
  return validate_state(raw, tol);
}

Json matrix_to_json(const Matrix2& m) {
  Json rows = Json::array();
  for (int r = 0; r < 2; ++r)
    rows.push_back(
        Json::array({complex_to_json(m(r, 0)), complex_to_json(m(r, 1))}));
  return rows;
}

Json measurement_to_json(const Measurement2& m) {
  return Json{{"qubit", std::string(to_string(m.qubit()))},
              {"operators",
               Json::array({matrix_to_json(m.op(0)), matrix_to_json(m.op(1))})}};
}

Measurement2 measurement_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("qubit") || !j["qubit"].is_string() ||
      !j.contains("operators") || !j["operators"].is_array() ||
      j["operators"].size() != 2)
    parse_error("measurement needs \"qubit\" and two \"operators\"");
  auto q = qubit_from_string(j["qubit"].get<std::string>());
  if (!q) parse_error("qubit must be one of A, B, C");
  return Measurement2::create(*q, matrix_from_json(j["operators"][0]),
                              matrix_from_json(j["operators"][1]), tol);
}

Json gram_to_json(const GramParams& g) {
  return Json{{"a", g.a}, {"b", g.b}, {"k", g.k}, {"theta", g.theta}};
}

Json coeffs_to_json(const SchmidtCoeffs& s) {
  return Json{{"lambda", s.lambda}, {"phi", s.phi}};
}

Json c_params_to_json(const CParams& c) {
  return Json{{"c_ab", c.c_ab}, {"c_ac", c.c_ac}, {"c_bc", c.c_bc},
              {"tau", c.tau},   {"j5", c.j5}};
}

Json class_to_json(const StateClass& c) {
  Json j{{"kind", std::string(to_string(c.kind))},
         {"ep_definite", c.ep_definite},
         {"zeta_tilde_definite", c.zeta_tilde_definite}};
  j["pair"] = c.pair ? Json(std::string(to_string(*c.pair))) : Json(nullptr);
  return j;
}

Json report_to_json(const InvariantReport& r) {
  return Json{
      {"c_params", c_params_to_json(r.c)},
      {"k_params",
       {{"k_ab", r.k.k_ab}, {"k_ac", r.k.k_ac}, {"k_bc", r.k.k_bc},
        {"tau", r.k.tau}, {"j5", r.k.j5}}},
      {"q_e", to_int(r.charge)},
      {"phi5", optional_number(r.phi5)},
      {"class", class_to_json(r.cls)},
      {"derived",
       {{"j_ap", r.d.j_ap}, {"k_ap", r.d.k_ap}, {"k5", r.d.k5},
        {"delta_j", r.d.delta_j}}},
      {"schmidt", coeffs_to_json(r.coeffs)}};
}

Json lu_comparison_to_json(const LuComparison& c) {
  return Json{{"equivalent", c.equivalent},
              {"diff",
               {{"c_ab", c.delta[0]}, {"c_ac", c.delta[1]}, {"c_bc", c.delta[2]},
                {"tau", c.delta[3]}, {"j5", c.delta[4]},
                {"q_e", c.charge_b - c.charge_a}}}};
}

Json verdict_to_json(const LoccVerdict& v, std::optional<int> min_measurements) {
  Json j{{"feasible", v.feasible}, {"case", std::string(to_string(v.which))}};
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = Json{{"zeta", w.zeta},          {"zeta_a", w.zeta_a},
                        {"zeta_b", w.zeta_b},      {"zeta_c", w.zeta_c},
                        {"zeta_lower", w.zeta_lower},
                        {"zeta_tilde", optional_number(w.zeta_tilde)}};
  } else {
    j["witness"] = nullptr;
  }
  j["violated"] =
      v.violated ? Json(std::string(to_string(*v.violated))) : Json(nullptr);
  j["min_measurements"] =
      min_measurements ? Json(*min_measurements) : Json(nullptr);
  return j;
}

Json extended_to_json(const ExtendedReal& x) {
  switch (x.kind) {
    case ExtendedReal::Kind::Finite: return x.value;
    case ExtendedReal::Kind::Infinite: return "infinity";
    case ExtendedReal::Kind::Indefinite: return "indefinite";
  }
  return nullptr;
}

Json ghz_canonical_to_json(const GhzCanonical& g) {
  Json j{{"c_a", g.c_a}, {"c_b", g.c_b}, {"c_c", g.c_c}, {"z_abs", g.z_abs}};
  j["z"] = g.z ? complex_to_json(*g.z) : Json(nullptr);
  j["n"] = extended_to_json(g.n);
  j["s"] = extended_to_json(g.s);
  return j;
}

Json outcomes_to_json(const std::array<Outcome, 2>& outcomes) {
  Json arr = Json::array();
  for (const auto& o : outcomes) {
    Json j{{"probability", o.probability}, {"degenerate", o.degenerate}};
    j["state"] = o.state ? state_to_json(*o.state) : Json(nullptr);
    arr.push_back(j);
  }
  return arr;
}

Json fuzz_report_to_json(const FuzzReport& r) {
  return Json{{"max_deviation", r.max_deviation},
              {"pass", r.pass},
              {"samples", r.samples},
              {"violations", r.violations}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

std::string dump(const Json& j, bool pretty) {
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace tqlocc

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


#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tqlocc/error.hpp"
#include "tqlocc/invariants.hpp"
#include "tqlocc/json_io.hpp"
#include "tqlocc/locc.hpp"
#include "tqlocc/random.hpp"
#include "tqlocc/schmidt.hpp"
#include "tqlocc/transfer.hpp"

namespace {

using namespace tqlocc;

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Config {
  double tol_zero = Tolerances{}.zero;
  double tol_norm = Tolerances{}.norm;
  double tol_eq = Tolerances{}.eq;
  std::uint64_t seed = 0;
  bool pretty = false;

  Tolerances tolerances() const {
    Tolerances t;
    t.zero = tol_zero;
    t.norm = tol_norm;
    t.eq = tol_eq;
    return t;
  }
};

void emit(const Json& j, const Config& cfg) {
  std::cout << dump(j, cfg.pretty) << '\n';
}

PureState3 load_state(const std::string& path, const Config& cfg) {
  return state_from_json(read_json_file(path), cfg.tolerances());
}

int cmd_invariants(const std::string& path, const Config& cfg) {
  emit(report_to_json(analyze(load_state(path, cfg), cfg.tolerances())), cfg);
  return kAffirmative;
}

int cmd_lu_equiv(const std::string& a, const std::string& b,
                 const Config& cfg) {
  const LuComparison c =
      compare_lu(load_state(a, cfg), load_state(b, cfg), cfg.tolerances());
  emit(lu_comparison_to_json(c), cfg);
  return c.equivalent ? kAffirmative : kNegative;
}

int cmd_locc_check(const std::string& src, const std::string& dst,
                   const Config& cfg) {
  const Tolerances tol = cfg.tolerances();
  const InvariantReport s = analyze(load_state(src, cfg), tol);
  const InvariantReport d = analyze(load_state(dst, cfg), tol);
  const LoccVerdict v = dlocc_feasible(s, d, tol);
  std::optional<int> count;
  if (v.feasible) count = min_measurements(s, d, tol);
  emit(verdict_to_json(v, count), cfg);
  return v.feasible ? kAffirmative : kNegative;
}

int cmd_random(const std::string& name, std::optional<std::uint64_t> seed,
               const Config& cfg) {
  const auto tag = state_class_from_string(name);
  if (!tag) throw Error(ErrorCode::Parse, "unknown state class " + name);
  emit(state_to_json(random_state(*tag, seed.value_or(cfg.seed))), cfg);
  return kAffirmative;
}

int cmd_measure(const std::string& state_path, const std::string& meas_path,
                const Config& cfg) {
  const Tolerances tol = cfg.tolerances();
  const PureState3 s = load_state(state_path, cfg);
  const Measurement2 m = measurement_from_json(read_json_file(meas_path), tol);
  Json j = outcomes_to_json(measure(s, m, tol));
  for (auto& o : j) {
    if (!o["state"].is_null())
      o["invariants"] = report_to_json(analyze(state_from_json(o["state"]), tol));
  }
  emit(Json{{"outcomes", j}}, cfg);
  return kAffirmative;
}

int cmd_synth_bisep(const std::string& path, const Config& cfg) {
  const Tolerances tol = cfg.tolerances();
  const PureState3 s = load_state(path, cfg);
  const InvariantReport r = analyze(s, tol);
  const Measurement2 m = synth_bisep_measurement(s, tol);
  const auto out = measure(s, m, tol);

  Json outcomes = Json::array();
  bool all_bisep = true;
  double worst = 0.0;
  for (const auto& o : out) {
    Json e{{"probability", o.probability}};
    if (o.state) {
      const InvariantReport q = analyze(*o.state, tol);
      const double c2 = q.c.c_bc * q.c.c_bc;
      worst = std::max(worst, std::abs(c2 - r.k.k_bc));
      all_bisep = all_bisep && q.cls.kind != StateKind::GhzType &&
                  q.cls.kind != StateKind::WType;
      e["c_bc_squared"] = c2;
      e["class"] = class_to_json(q.cls);
    }
    outcomes.push_back(e);
  }
  const bool equivalent = out[0].state && out[1].state &&
                          lu_equivalent(*out[0].state, *out[1].state, tol);
  Json j{{"measurement", measurement_to_json(m)},
         {"gram", gram_to_json(bisep_gram(r.coeffs, tol))},
         {"verification",
          {{"outcomes", outcomes},
           {"k_bc", r.k.k_bc},
           {"max_deviation", worst},
           {"outcomes_lu_equivalent", equivalent},
           {"biseparable", all_bisep}}}};
  emit(j, cfg);
  return kAffirmative;
}

int cmd_ghz_canonical(const std::string& path, const Config& cfg) {
  const Tolerances tol = cfg.tolerances();
  const PureState3 s = load_state(path, cfg);
  try {
    emit(ghz_canonical_to_json(ghz_canonical(s, tol)), cfg);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotGhzType) throw;
    std::cerr << e.what() << '\n';
    return kNegative;
  }
  return kAffirmative;
}

int cmd_verify_lemmas(int samples, const Config& cfg) {
  const Tolerances tol = cfg.tolerances();
  const FuzzReport l1 = fuzz_lemma1(samples, cfg.seed, tol);
  const FuzzReport l2 = fuzz_lemma2(samples, cfg.seed + 1, tol);
  const FuzzReport pa = fuzz_sum_p_alpha(samples, cfg.seed + 2);
  const FuzzReport l4 = fuzz_lemma4(samples, cfg.seed + 3, tol);
  const bool pass = l1.pass && l2.pass && pa.pass && l4.pass;
  emit(Json{{"lemma1", fuzz_report_to_json(l1)},
            {"lemma2", fuzz_report_to_json(l2)},
            {"sum_p_alpha", fuzz_report_to_json(pa)},
            {"lemma4", fuzz_report_to_json(l4)},
            {"pass", pass}},
       cfg);
  return pass ? kAffirmative : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-qubit entanglement invariants and deterministic LOCC"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  auto tol_range = CLI::Validator(
      [](std::string& s) -> std::string {
        double x = 0.0;
        try {
          x = std::stod(s);
        } catch (const std::exception&) {
          return "tolerance must be a number";
        }
        return x > 0.0 && x < 1e-2 ? "" : "tolerance must lie in (0, 1e-2)";
      },
      "(0, 1e-2)");
  app.add_option("--tol-zero", cfg.tol_zero, "Zero threshold")
      ->check(tol_range);
  app.add_option("--tol-norm", cfg.tol_norm, "Normalization threshold")
      ->check(tol_range);
  app.add_option("--tol-eq", cfg.tol_eq, "Invariant comparison threshold")
      ->check(tol_range);
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_flag("--pretty", cfg.pretty, "Indented JSON output");

  std::string a, b;
  std::optional<std::uint64_t> seed_arg;
  int samples = 1000;

  auto* inv = app.add_subcommand("invariants", "Invariant report of a state");
  inv->add_option("state", a)->required();
  auto* lu = app.add_subcommand("lu-equiv", "LU-equivalence of two states");
  lu->add_option("a", a)->required();
  lu->add_option("b", b)->required();
  auto* locc = app.add_subcommand("locc-check", "Deterministic LOCC feasibility");
  locc->add_option("src", a)->required();
  locc->add_option("dst", b)->required();
  auto* rnd = app.add_subcommand("random", "Sample a state of a given class");
  rnd->add_option("class", a)->required();
  rnd->add_option("seed", seed_arg);
  auto* meas = app.add_subcommand("measure", "Apply a two-outcome measurement");
  meas->add_option("state", a)->required();
  meas->add_option("measurement", b)->required();
  auto* bisep = app.add_subcommand("synth-bisep", "Biseparating measurement");
  bisep->add_option("state", a)->required();
  auto* canon = app.add_subcommand("ghz-canonical", "Canonical GHZ-type form");
  canon->add_option("state", a)->required();
  auto* lemmas = app.add_subcommand("verify-lemmas", "Randomized law checks");
  lemmas->add_option("--samples", samples)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*inv) return cmd_invariants(a, cfg);
    if (*lu) return cmd_lu_equiv(a, b, cfg);
    if (*locc) return cmd_locc_check(a, b, cfg);
    if (*rnd) return cmd_random(a, seed_arg, cfg);
    if (*meas) return cmd_measure(a, b, cfg);
    if (*bisep) return cmd_synth_bisep(a, cfg);
    if (*canon) return cmd_ghz_canonical(a, cfg);
    if (*lemmas) return cmd_verify_lemmas(samples, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

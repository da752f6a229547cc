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


// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tqlocc/error.hpp"
#include "tqlocc/invariants.hpp"
#include "tqlocc/locc.hpp"
#include "tqlocc/random.hpp"
#include "tqlocc/schmidt.hpp"
#include "tqlocc/transfer.hpp"

namespace {

using namespace tqlocc;

struct Verdict {
  bool pass = false;
  std::string detail;
};

constexpr StateClassTag kMix[] = {
    StateClassTag::Haar,          StateClassTag::GhzType,
    StateClassTag::WType,         StateClassTag::BiseparableAB,
    StateClassTag::BiseparableAC, StateClassTag::BiseparableBC,
    StateClassTag::FullSeparable, StateClassTag::Haar};

PureState3 mixed_state(std::uint64_t i, Rng& rng) {
  return random_state(kMix[i % 8], rng);
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

PureState3 amplitudes_state(std::initializer_list<std::pair<int, double>> e) {
  std::vector<Complex> a(8, 0.0);
  for (const auto& [i, v] : e) a[i] = v;
  return validate_state(a);
}

Verdict lu_invariance() {
  Rng rng(101);
  double worst = 0.0;
  int charge_changes = 0;
  for (int i = 0; i < 1000; ++i) {
    const PureState3 s = mixed_state(i, rng);
    const InvariantReport r = analyze(s);
    for (int k = 0; k < 3; ++k) {
      const InvariantReport t = analyze(testing::scramble(s, rng));
      const auto a = r.c.as_array(), b = t.c.as_array();
      for (std::size_t j = 0; j < 5; ++j)
        worst = std::max(worst, std::abs(a[j] - b[j]));
      charge_changes += t.charge != r.charge;
    }
  }
  return {worst <= 1e-9 && charge_changes == 0,
          fmt("max deviation %.3g, charge changes %d", worst, charge_changes)};
}

Verdict inversion_round_trip() {
  Rng rng(202);
  double worst = 0.0;
  int failures = 0, neutral = 0, not_equivalent = 0;
  for (int i = 0; i < 1000; ++i) {
    const PureState3 s = mixed_state(i, rng);
    const InvariantReport r = analyze(s);
    try {
      const auto sets = coeffs_from_invariants(r.c, r.charge);
      for (const auto& c : sets) {
        const auto a = c_params(c).as_array(), b = r.c.as_array();
        for (std::size_t j = 0; j < 5; ++j)
          worst = std::max(worst, std::abs(a[j] - b[j]));
      }
      if (r.charge == Charge::Zero && sets.size() == 2) {
        ++neutral;
        not_equivalent += !lu_equivalent(state_from_schmidt(sets[0]),
                                         state_from_schmidt(sets[1]));
      }
    } catch (const Error&) {
      ++failures;
    }
  }
  return {worst <= 1e-8 && failures == 0 && not_equivalent == 0,
          fmt("max deviation %.3g, failures %d, neutral pairs %d, "
              "non-equivalent pairs %d",
              worst, failures, neutral, not_equivalent)};
}

Verdict lemma1() {
  const FuzzReport r = fuzz_lemma1(10000, 303);
  return {r.pass, fmt("max deviation %.3g, violations %d of %d",
                      r.max_deviation, r.violations, r.samples)};
}

Verdict fuzz_bounds() {
  const FuzzReport l2 = fuzz_lemma2(10000, 404);
  const FuzzReport pa = fuzz_sum_p_alpha(10000, 405);
  const FuzzReport l4 = fuzz_lemma4(10000, 406);
  return {l2.pass && pa.pass && l4.pass,
          fmt("violations: concurrence bounds %d, sum p alpha %d, "
              "sqrt K_BC bound %d",
              l2.violations, pa.violations, l4.violations)};
}

Verdict biseparating_measurement() {
  Rng rng(505);
  int n = 0, bad = 0;
  double worst = 0.0;
  while (n < 500) {
    const PureState3 s = random_state(StateClassTag::Haar, rng);
    const InvariantReport r = analyze(s);
    if (!r.cls.ep_definite) continue;
    ++n;
    const auto out = measure(s, synth_bisep_measurement(s));
    if (!out[0].state || !out[1].state ||
        !lu_equivalent(*out[0].state, *out[1].state)) {
      ++bad;
      continue;
    }
    for (const auto& o : out) {
      const InvariantReport q = analyze(*o.state);
      const double dev = std::abs(q.c.c_bc * q.c.c_bc - r.k.k_bc);
      worst = std::max(worst, dev);
      if (q.cls.kind != StateKind::Biseparable || q.cls.pair != Pair::BC ||
          dev > 1e-8)
        ++bad;
    }
  }
  const PureState3 ghz = amplitudes_state({{0, M_SQRT1_2}, {7, M_SQRT1_2}});
  double ghz_dev = 0.0;
  for (const auto& o : measure(ghz, synth_bisep_measurement(ghz)))
    ghz_dev = std::max(ghz_dev, o.state ? std::abs(analyze(*o.state).c.c_bc - 1.0)
                                        : 1.0);
  return {bad == 0 && ghz_dev <= 1e-10,
          fmt("bad states %d of %d, max |C'^2 - K_BC| %.3g, GHZ |C'-1| %.3g",
              bad, n, worst, ghz_dev)};
}

struct PairSample {
  InvariantReport src;
  InvariantReport dst;
  bool feasible = false;
};

// Feasible pairs collected by the differential and chain checks.
std::vector<PairSample> g_feasible;

Verdict theorem_differential() {
  Rng rng(606);
  int n = 0, disagree = 0, feasible = 0;
  while (n < 1000) {
    const InvariantReport src =
        analyze(random_state(StateClassTag::GhzType, rng));
    if (!src.cls.ep_definite) continue;
    std::optional<PureState3> dst;
    switch (n % 4) {
      case 0:
      case 1: dst = testing::feasible_target(src, rng); break;
      case 2: dst = testing::infeasible_target(src, rng); break;
      default: dst = random_state(StateClassTag::GhzType, rng); break;
    }
    if (!dst) continue;
    const InvariantReport d = analyze(testing::scramble(*dst, rng));
    if (d.cls.kind != StateKind::GhzType || !d.cls.ep_definite) continue;
    ++n;
    const bool a = dlocc_feasible(src, d).feasible;
    const bool b = ghz_oracle(src, d);
    disagree += a != b;
    feasible += a;
    if (a) g_feasible.push_back({src, d, true});
  }
  return {disagree == 0, fmt("%d pairs (%d feasible), disagreements %d", n,
                             feasible, disagree)};
}

Verdict charge_laws() {
  int conserved_checked = 0, not_conserved = 0, definite_to_indefinite = 0;
  for (const auto& p : g_feasible) {
    if (p.src.cls.zeta_tilde_definite) {
      ++conserved_checked;
      not_conserved += p.src.charge != p.dst.charge;
      if (p.src.cls.truly_tripartite() && p.dst.cls.truly_tripartite() &&
          !p.dst.cls.zeta_tilde_definite)
        ++definite_to_indefinite;
    }
  }
  Rng rng(707);
  int flip_fail = 0, perm_fail = 0, charged = 0;
  for (int i = 0; i < 1000; ++i) {
    const PureState3 s = mixed_state(i, rng);
    const Charge q = analyze(s).charge;
    charged += q != Charge::Zero;
    flip_fail += to_int(analyze(complex_conjugate(s)).charge) != -to_int(q);
    for (const auto& perm : all_permutations())
      perm_fail += analyze(permute_qubits(s, perm)).charge != q;
  }
  return {not_conserved == 0 && definite_to_indefinite == 0 &&
              flip_fail == 0 && perm_fail == 0 && conserved_checked > 0,
          fmt("conservation %d/%d, definite->indefinite %d, conjugation "
              "failures %d, permutation failures %d (%d charged states)",
              conserved_checked - not_conserved, conserved_checked,
              definite_to_indefinite, flip_fail, perm_fail, charged)};
}

Verdict table_lookup() {
  const PureState3 ghz = amplitudes_state({{0, M_SQRT1_2}, {7, M_SQRT1_2}});
  const PureState3 bell = amplitudes_state({{0, M_SQRT1_2}, {3, M_SQRT1_2}});
  const PureState3 weaker =
      amplitudes_state({{0, std::cos(0.4)}, {3, std::sin(0.4)}});
  const PureState3 product = PureState3();
  // A GHZ-type target reachable from GHZ: J5 = 0 and canonical c_i > 0.
  SchmidtCoeffs t;
  t.lambda = {0.5, 0.5, 0.4, 0.4, std::sqrt(0.18)};
  t.phi = std::acos(0.16 / (0.5 * std::sqrt(0.18)));
  const PureState3 ghz_type = state_from_schmidt(t);
  int got[4] = {-1, -1, -1, -1};
  try {
    got[0] = min_measurements(ghz, ghz_type);
    got[1] = min_measurements(ghz, bell);
    got[2] = min_measurements(bell, weaker);
    got[3] = min_measurements(product, product);
  } catch (const Error&) {
  }
  return {got[0] == 3 && got[1] == 2 && got[2] == 1 && got[3] == 0,
          fmt("(%d, %d, %d, %d)", got[0], got[1], got[2], got[3])};
}

bool k_monotone(const InvariantReport& s, const InvariantReport& d) {
  return d.k.k_ab <= s.k.k_ab + 1e-9 && d.k.k_ac <= s.k.k_ac + 1e-9 &&
         d.k.k_bc <= s.k.k_bc + 1e-9 && d.k.tau <= s.k.tau + 1e-9;
}

Verdict partial_order() {
  Rng rng(808);
  int reflexive_fail = 0;
  for (int i = 0; i < 1000; ++i) {
    const InvariantReport r = analyze(mixed_state(i, rng));
    reflexive_fail += !dlocc_feasible(r, r).feasible;
  }
  int chains = 0, transitive_fail = 0, monotone_fail = 0, verdicts = 0;
  int attempts = 0;
  while (chains < 1000 && attempts < 20000) {
    ++attempts;
    const InvariantReport a =
        analyze(random_state(StateClassTag::GhzType, rng));
    if (!a.cls.zeta_tilde_definite) continue;
    const auto b_state = testing::feasible_target(a, rng);
    if (!b_state) continue;
    const InvariantReport b = analyze(testing::scramble(*b_state, rng));
    if (!b.cls.zeta_tilde_definite) continue;
    const auto c_state = testing::feasible_target(b, rng);
    if (!c_state) continue;
    const InvariantReport c = analyze(testing::scramble(*c_state, rng));
    const LoccVerdict ab = dlocc_feasible(a, b), bc = dlocc_feasible(b, c);
    if (!ab.feasible || !bc.feasible) continue;
    ++chains;
    g_feasible.push_back({a, b, true});
    transitive_fail += !dlocc_feasible(a, c).feasible;
  }
  // Monotone necessity on every feasible verdict seen, plus random pairs.
  for (const auto& p : g_feasible) {
    ++verdicts;
    monotone_fail += !k_monotone(p.src, p.dst);
  }
  for (int i = 0; i < 2000; ++i) {
    const InvariantReport s = analyze(mixed_state(i, rng));
    const InvariantReport d = analyze(mixed_state(i + 3, rng));
    if (!dlocc_feasible(s, d).feasible) continue;
    ++verdicts;
    monotone_fail += !k_monotone(s, d);
  }
  return {reflexive_fail == 0 && transitive_fail == 0 && monotone_fail == 0 &&
              chains == 1000,
          fmt("reflexivity failures %d, monotonicity failures %d of %d, "
              "transitivity failures %d of %d chains",
              reflexive_fail, monotone_fail, verdicts, transitive_fail,
              chains)};
}

Verdict two_concurrences_fuzz() {
  Rng rng(909);
  int hits = 0;
  for (int i = 0; i < 100000; ++i) {
    SchmidtCoeffs s;
    double n2 = 0.0;
    const int mask = static_cast<int>(rng.next_u64() % 32);
    for (int j = 0; j < 5; ++j) {
      s.lambda[j] = (mask >> j) & 1 ? 0.0 : rng.uniform();
      n2 += s.lambda[j] * s.lambda[j];
    }
    if (n2 == 0.0) continue;
    for (double& l : s.lambda) l /= std::sqrt(n2);
    s.phi = rng.uniform(0.0, M_PI);
    const CParams c = c_params(s);
    const int nonzero = (c.c_ab > 1e-9) + (c.c_ac > 1e-9) + (c.c_bc > 1e-9);
    // The tangle is quadratic in the coefficients; its square root is on
    // the same scale as the concurrences.
    hits += nonzero == 2 && std::sqrt(c.tau) <= 1e-9;
  }
  return {hits == 0, fmt("states with two concurrences and no tangle: %d", hits)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
  double budget_s;  // 0 means no runtime requirement
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "LU invariance of the six parameters", lu_invariance, 10.0},
      {2, "inversion round trip", inversion_round_trip, 10.0},
      {3, "measurement update exactness", lemma1, 0.0},
      {4, "concurrence, sum p alpha and sqrt K_BC bounds", fuzz_bounds, 0.0},
      {5, "biseparating measurement", biseparating_measurement, 0.0},
      {6, "feasibility versus canonical-form oracle", theorem_differential, 0.0},
      {7, "charge laws", charge_laws, 0.0},
      {8, "minimum measurement counts", table_lookup, 0.0},
      {9, "partial order sanity", partial_order, 0.0},
      {10, "no two concurrences without tangle", two_concurrences_fuzz, 0.0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (c.budget_s > 0.0 && secs > c.budget_s) {
      v.pass = false;
      v.detail += fmt(", over the %.0f s budget", c.budget_s);
    }
    std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL",
                c.id, c.name, v.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !v.pass;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

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


#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "tqlocc/error.hpp"
#include "tqlocc/invariants.hpp"
#include "tqlocc/locc.hpp"
#include "tqlocc/random.hpp"
#include "tqlocc/schmidt.hpp"
#include "tqlocc/transfer.hpp"

namespace tqlocc {
namespace {

SchmidtCoeffs ghz_coeffs() {
  SchmidtCoeffs s;
  s.lambda = {M_SQRT1_2, 0.0, 0.0, 0.0, M_SQRT1_2};
  return s;
}

PureState3 ghz() { return state_from_schmidt(ghz_coeffs()); }

Measurement2 projective(Qubit q) {
  Matrix2 p0 = Matrix2::Zero(), p1 = Matrix2::Zero();
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return Measurement2::create(q, p0, p1);
}

Measurement2 identity_like(Qubit q) {
  // sqrt(x) I and sqrt(1 - x) I: both outcomes equal the input.
  return Measurement2::create(q, std::sqrt(0.3) * Matrix2::Identity(),
                              std::sqrt(0.7) * Matrix2::Identity());
}

TEST(PredictOutcome, IdentityGram) {
  Rng rng(1);
  const SchmidtCoeffs s =
      schmidt_decompose(random_state(StateClassTag::Haar, rng)).coeffs;
  const OutcomePrediction o = predict_outcome(s, GramParams{1, 1, 0, 0});
  EXPECT_NEAR(o.p, 1.0, 1e-14);
  EXPECT_NEAR(o.alpha, 1.0, 1e-14);
  const auto got = o.c.as_array(), want = c_params(s).as_array();
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(got[i], want[i], 1e-14);
}

TEST(PredictOutcome, ProjectiveOnGhz) {
  const OutcomePrediction o = predict_outcome(ghz_coeffs(), GramParams{1, 0, 0, 0});
  EXPECT_NEAR(o.p, 0.5, 1e-15);
  EXPECT_NEAR(o.alpha, 0.0, 1e-15);
  for (double x : o.c.as_array()) EXPECT_NEAR(x, 0.0, 1e-12);
}

TEST(PredictOutcome, TransferGramOnGhz) {
  const OutcomePrediction o =
      predict_outcome(ghz_coeffs(), GramParams{0.5, 0.5, 0.5, M_PI / 2});
  EXPECT_NEAR(o.p, 0.5, 1e-15);
  EXPECT_NEAR(o.c.c_bc, 1.0, 1e-12);
  EXPECT_NEAR(o.c.tau, 0.0, 1e-12);
}

TEST(PredictOutcome, ZeroProbabilityRejected) {
  SchmidtCoeffs s;
  try {
    predict_outcome(s, GramParams{0, 1, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroProbability);
  }
}

TEST(VerifyUpdate, RandomPairs) {
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const PureState3 s =
        random_state(static_cast<StateClassTag>(i % 6), rng);
    const Measurement2 m = random_measurement(static_cast<Qubit>(i % 3), rng);
    const UpdateReport r = verify_update(s, m);
    EXPECT_TRUE(r.pass) << i << " dev " << r.max_deviation;
    EXPECT_LE(r.max_deviation, 1e-9);
    EXPECT_LE(r.probability_defect, 1e-12);
  }
}

TEST(VerifyUpdate, IdentityAndProjective) {
  const PureState3 s = random_state(StateClassTag::GhzType, 3);
  const UpdateReport id = verify_update(s, identity_like(Qubit::A));
  EXPECT_TRUE(id.pass);
  EXPECT_LT(id.max_deviation, 1e-12);
  EXPECT_EQ(id.compared_outcomes, 2);
  const UpdateReport pr = verify_update(PureState3(), projective(Qubit::A));
  EXPECT_TRUE(pr.pass);
  EXPECT_EQ(pr.compared_outcomes, 1);
}

TEST(TransferRule, Examples) {
  const CParams c{0.3, 0.2, 0.4, 0.5, 0.01};
  const CParams id = transfer_rule(c, {1.0, 0.7});
  const auto a = id.as_array(), b = c.as_array();
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(a[i], b[i], 1e-15);

  const CParams g{0, 0, 0, 1, 0};
  const CParams bell = transfer_rule(g, {0.0, 1.0});
  EXPECT_NEAR(bell.c_bc, 1.0, 1e-15);
  EXPECT_EQ(bell.tau, 0.0);
  EXPECT_EQ(bell.c_ab, 0.0);
  for (double x : transfer_rule(g, {0.0, 0.0}).as_array()) EXPECT_EQ(x, 0.0);
}

TEST(SynthBisep, Ghz) {
  const GramParams g = bisep_gram(ghz_coeffs());
  EXPECT_NEAR(g.a, 0.5, 1e-15);
  EXPECT_NEAR(g.b, 0.5, 1e-15);
  EXPECT_NEAR(g.k, 0.5, 1e-15);
  EXPECT_NEAR(g.theta, M_PI / 2, 1e-15);
  const auto out = measure(ghz(), synth_bisep_measurement(ghz()));
  for (const auto& o : out) {
    ASSERT_TRUE(o.state.has_value());
    const InvariantReport r = analyze(*o.state);
    EXPECT_NEAR(r.c.c_bc, 1.0, 1e-10);
    EXPECT_NEAR(r.c.tau, 0.0, 1e-10);
  }
}

TEST(SynthBisep, ProductState) {
  const GramParams g = bisep_gram(SchmidtCoeffs{});
  EXPECT_NEAR(g.a, 0.5, 1e-15);
  EXPECT_NEAR(g.b, 0.5, 1e-15);
  EXPECT_NEAR(g.k, 0.5, 1e-15);
  for (const auto& o : measure(PureState3(), synth_bisep_measurement(PureState3()))) {
    ASSERT_TRUE(o.state.has_value());
    EXPECT_EQ(classify(*o.state).kind, StateKind::FullSeparable);
  }
}

TEST(SynthBisep, DegenerateInput) {
  SchmidtCoeffs s;
  s.lambda = {0.0, 0.6, 0.0, 0.0, 0.8};
  try {
    bisep_gram(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
}

TEST(SynthBisep, RandomEpDefinite) {
  Rng rng(4);
  int n = 0;
  while (n < 100) {
    const PureState3 s = random_state(StateClassTag::Haar, rng);
    const InvariantReport r = analyze(s);
    if (!r.cls.ep_definite) continue;
    ++n;
    const auto out = measure(s, synth_bisep_measurement(s));
    ASSERT_TRUE(out[0].state && out[1].state);
    EXPECT_TRUE(lu_equivalent(*out[0].state, *out[1].state));
    for (const auto& o : out) {
      const InvariantReport q = analyze(*o.state);
      EXPECT_EQ(q.cls.kind, StateKind::Biseparable);
      EXPECT_EQ(q.cls.pair, Pair::BC);
      EXPECT_NEAR(q.c.c_bc * q.c.c_bc, r.k.k_bc, 1e-8);
    }
  }
}

TEST(Lemma2Bounds, Identity) {
  const PureState3 s = random_state(StateClassTag::GhzType, 5);
  const Lemma2Bounds b = lemma2_bounds(s, identity_like(Qubit::A));
  EXPECT_NEAR(b.mid, b.lhs, 1e-10);
  EXPECT_NEAR(b.rhs, b.lhs, 1e-10);
  EXPECT_NEAR(b.sum_p_alpha, 1.0, 1e-12);
  EXPECT_TRUE(b.holds);
}

TEST(Lemma2Bounds, SaturatedOnGhz) {
  const Lemma2Bounds b = lemma2_bounds(ghz(), synth_bisep_measurement(ghz()));
  EXPECT_NEAR(b.lhs, 0.0, 1e-12);
  EXPECT_NEAR(b.mid, 1.0, 1e-10);
  EXPECT_NEAR(b.rhs, 1.0, 1e-10);
  EXPECT_TRUE(b.holds);
}

TEST(Lemma2Bounds, RequiresMeasurementOnA) {
  EXPECT_THROW(lemma2_bounds(ghz(), identity_like(Qubit::B)), Error);
}

TEST(Lemma4Check, IdentityIsEquality) {
  const PureState3 s = random_state(StateClassTag::GhzType, 6);
  const Lemma4Check c = lemma4_check(s, identity_like(Qubit::A));
  EXPECT_TRUE(c.holds);
  EXPECT_TRUE(c.saturated);
  ASSERT_TRUE(c.saturation_predicted.has_value());
  EXPECT_TRUE(*c.saturation_predicted);
}

TEST(Lemma4Check, MeasurementsOnBAndC) {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const PureState3 s = random_state(StateClassTag::Haar, rng);
    const Qubit q = i % 2 ? Qubit::B : Qubit::C;
    const Measurement2 m = random_measurement(q, rng);
    const Lemma4Check c = lemma4_check(s, m);
    EXPECT_TRUE(c.holds);
    EXPECT_FALSE(c.saturation_predicted.has_value());
  }
}

TEST(Lemma4Check, SaturationPredictedMatchesObserved) {
  const Lemma4Check c = lemma4_check(ghz(), synth_bisep_measurement(ghz()));
  EXPECT_TRUE(c.holds);
  EXPECT_TRUE(c.saturated);
  EXPECT_TRUE(c.saturation_predicted.value_or(false));
}

TEST(Fuzz, AllLawsHold) {
  for (const FuzzReport& r :
       {fuzz_lemma1(500, 11), fuzz_lemma2(500, 12), fuzz_sum_p_alpha(500, 13),
        fuzz_lemma4(500, 14)}) {
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.violations, 0);
    EXPECT_EQ(r.samples, 500);
  }
}

TEST(Search, IdentityTarget) {
  const PureState3 s = random_state(StateClassTag::GhzType, 8);
  const auto found = search_deterministic_measurement(s, analyze(s).c);
  ASSERT_TRUE(found.has_value());
  EXPECT_LE(found->mismatch, 1e-6);
}

TEST(Search, GhzToBell) {
  const auto found =
      search_deterministic_measurement(ghz(), CParams{0, 0, 1, 0, 0});
  ASSERT_TRUE(found.has_value());
  const GramParams& g = found->gram;
  EXPECT_NEAR(g.a, 0.5, 1e-3);
  EXPECT_NEAR(g.b, 0.5, 1e-3);
  EXPECT_NEAR(g.k, 0.5, 1e-3);
  const auto out = measure(ghz(), found->measurement);
  ASSERT_TRUE(out[0].state && out[1].state);
  EXPECT_TRUE(lu_equivalent(*out[0].state, *out[1].state, Tolerances{1e-9, 1e-9, 1e-6}));
}

// For a zeta-tilde-definite source a measurement on A leaves zeta_B =
// zeta_C = 1 and must land on zeta = zeta_tilde, which fixes beta once
// alpha is chosen.
double pinned_beta(const InvariantReport& r, double alpha) {
  auto gap = [&](double za) {
    return zeta_tilde(r.k, r.d, za, 1.0, 1.0) * za - alpha * alpha;
  };
  double lo = 1e-9, hi = 1.0;
  const bool lo_negative = gap(lo) < 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((gap(mid) < 0.0) == lo_negative ? lo : hi) = mid;
  }
  const double za = 0.5 * (lo + hi);
  const double zeta = zeta_tilde(r.k, r.d, za, 1.0, 1.0);
  return 1.0 - (1.0 - zeta) * r.k.k_bc / ((1.0 - alpha * alpha) * r.k.tau);
}

void expect_realized(const PureState3& s, const CParams& target) {
  const auto found = search_deterministic_measurement(s, target);
  ASSERT_TRUE(found.has_value());
  const auto out = measure(s, found->measurement);
  for (const auto& o : out) {
    if (o.degenerate) continue;
    const auto got = analyze(*o.state).c.as_array();
    const auto want = target.as_array();
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(got[i], want[i], 1e-6);
  }
  EXPECT_TRUE(verify_update(s, found->measurement).pass);
}

TEST(Search, TransferImageIsRealized) {
  const PureState3 s = random_state(StateClassTag::GhzType, 9);
  const InvariantReport r = analyze(s);
  ASSERT_TRUE(r.cls.zeta_tilde_definite);
  const double beta = pinned_beta(r, 0.8);
  ASSERT_GE(beta, 0.0);
  ASSERT_LE(beta, 1.0);
  expect_realized(s, transfer_rule(r.c, {0.8, beta}));
}

TEST(Search, TransferImagesAcrossStates) {
  int tried = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PureState3 s = random_state(StateClassTag::GhzType, seed);
    const InvariantReport r = analyze(s);
    if (!r.cls.zeta_tilde_definite) continue;
    const double beta = pinned_beta(r, 0.8);
    if (beta < 0.0 || beta > 1.0) continue;
    ++tried;
    SCOPED_TRACE(seed);
    expect_realized(s, transfer_rule(r.c, {0.8, beta}));
  }
  EXPECT_GE(tried, 30);
}

TEST(Search, UnpinnedTransferImageIsInfeasible) {
  // With beta free the image misses zeta_tilde: no deterministic protocol
  // reaches it, let alone a single measurement.
  const PureState3 s = random_state(StateClassTag::GhzType, 9);
  const InvariantReport r = analyze(s);
  const CParams target = transfer_rule(r.c, {0.8, 0.5});
  const InvariantReport d =
      analyze(state_from_schmidt(coeffs_from_invariants(target, r.charge).front()));
  const LoccVerdict v = dlocc_feasible(r, d);
  EXPECT_FALSE(v.feasible);
  ASSERT_TRUE(v.violated.has_value());
  EXPECT_EQ(*v.violated, Violation::ZetaNotTilde);
  EXPECT_FALSE(ghz_oracle(r, d));
  EXPECT_FALSE(search_deterministic_measurement(s, target).has_value());
}

}  // namespace
}  // namespace tqlocc

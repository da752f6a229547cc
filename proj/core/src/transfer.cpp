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


#include "tqlocc/transfer.hpp"

#include <algorithm>
#include <cmath>

#include "tqlocc/error.hpp"
#include "tqlocc/random.hpp"

namespace tqlocc {

namespace {

// Moves the measured qubit into slot A.
Permutation to_slot_a(Qubit q) {
  switch (q) {
    case Qubit::A: return {Qubit::A, Qubit::B, Qubit::C};
    case Qubit::B: return {Qubit::B, Qubit::A, Qubit::C};
    case Qubit::C: return {Qubit::C, Qubit::B, Qubit::A};
  }
  return {Qubit::A, Qubit::B, Qubit::C};
}

// Gram parameters of M as seen from the canonical frame of the state.
GramParams gram_in_frame(const Matrix2& m, const Matrix2& u_a) {
  Matrix2 g = u_a * (m.adjoint() * m) * u_a.adjoint();
  GramParams p;
  p.a = g(0, 0).real();
  p.b = g(1, 1).real();
  p.k = std::abs(g(1, 0));
  double th = p.k > 0.0 ? std::arg(g(1, 0)) : 0.0;
  if (th < 0.0) th += 2.0 * M_PI;
  p.theta = th;
  return p;
}

double gram_det(const Matrix2& m) {
  return std::max(0.0, (m.adjoint() * m).determinant().real());
}

Complex bc_vector(const SchmidtCoeffs& s) {
  return s.l2() * s.l3() - s.l1() * s.l4() * std::polar(1.0, s.phi);
}

}  // namespace

OutcomePrediction predict_outcome(const SchmidtCoeffs& s, const GramParams& g,
                                  const Tolerances& tol) {
  const double l0 = s.l0(), l1 = s.l1();
  OutcomePrediction out;
  out.p = l0 * l0 * g.a + (1.0 - l0 * l0) * g.b +
          2.0 * l0 * l1 * g.k * std::cos(g.theta - s.phi);
  if (out.p <= tol.zero)
    throw Error(ErrorCode::ZeroProbability,
                "outcome probability " + std::to_string(out.p));
  const double det = std::max(0.0, g.a * g.b - g.k * g.k);
  out.alpha = std::sqrt(det) / out.p;

  const CParams c = c_params(s);
  const double sqrt_tau = std::sqrt(c.tau);
  out.c.c_ab = out.alpha * c.c_ab;
  out.c.c_ac = out.alpha * c.c_ac;
  out.c.tau = out.alpha * out.alpha * c.tau;
  out.c.c_bc = std::abs(sqrt_tau * std::polar(g.k, g.theta) -
                        2.0 * g.b * bc_vector(s)) /
               out.p;

  SchmidtCoeffs t;
  if (g.b <= tol.zero * tol.zero) {
    t = SchmidtCoeffs{};
  } else {
    const double rb = std::sqrt(g.b), rp = std::sqrt(out.p);
    const Complex x1 = (l0 * std::polar(g.k, g.theta) +
                        l1 * std::polar(g.b, s.phi)) /
                       (rp * rb);
    t.lambda = {l0 * std::sqrt(det) / (rp * rb), std::abs(x1),
                s.l2() * rb / rp, s.l3() * rb / rp, s.l4() * rb / rp};
    t.phi = std::abs(x1) > 0.0 ? std::arg(x1) : 0.0;
    for (double v : t.lambda)
      if (v < tol.zero) t.phi = 0.0;
  }
  out.coeffs = t;
  out.c.j5 = c_params(t).j5;
  return out;
}

UpdatePrediction predict_update(const SchmidtCoeffs& coeffs,
                                const GramParams& gram,
                                const Tolerances& tol) {
  GramParams other;
  other.a = 1.0 - gram.a;
  other.b = 1.0 - gram.b;
  other.k = gram.k;
  other.theta = std::fmod(gram.theta + M_PI, 2.0 * M_PI);
  UpdatePrediction u;
  u.outcomes = {predict_outcome(coeffs, gram, tol),
                predict_outcome(coeffs, other, tol)};
  u.sum_p_alpha = 0.0;
  for (const auto& o : u.outcomes) u.sum_p_alpha += o.p * o.alpha;
  return u;
}

UpdateReport verify_update(const PureState3& state, const Measurement2& meas,
                           const Tolerances& tol) {
  const PureState3 ps = permute_qubits(state, to_slot_a(meas.qubit()));
  const Decomposition d = schmidt_decompose(ps, tol);
  const Measurement2 on_a =
      Measurement2::create(Qubit::A, meas.op(0), meas.op(1), tol);
  const auto outcomes = measure(ps, on_a, tol);

  UpdateReport r;
  r.probability_defect =
      std::abs(outcomes[0].probability + outcomes[1].probability - 1.0);
  for (std::size_t i = 0; i < 2; ++i) {
    if (outcomes[i].degenerate) continue;
    const GramParams g = gram_in_frame(on_a.op(i), d.u_a);
    const OutcomePrediction pred = predict_outcome(d.coeffs, g, tol);
    const InvariantReport got = analyze(*outcomes[i].state, tol);
    const auto a = pred.c.as_array(), b = got.c.as_array();
    for (std::size_t j = 0; j < 5; ++j)
      r.max_deviation = std::max(r.max_deviation, std::abs(a[j] - b[j]));
    r.max_deviation =
        std::max(r.max_deviation, std::abs(pred.p - outcomes[i].probability));
    const Charge qp = q_e(pred.coeffs, c_params(pred.coeffs), tol);
    r.charges_match = r.charges_match && qp == got.charge;
    ++r.compared_outcomes;
  }
  r.pass = r.max_deviation <= 1e-9 && r.probability_defect <= 1e-12 &&
           r.charges_match;
  return r;
}

CParams transfer_rule(const CParams& c, const TransferParams& t) {
  const double a2 = t.alpha_a * t.alpha_a;
  CParams o;
  o.c_ab = t.alpha_a * c.c_ab;
  o.c_ac = t.alpha_a * c.c_ac;
  o.tau = a2 * c.tau;
  o.j5 = a2 * c.j5;
  o.c_bc = std::sqrt(c.c_bc * c.c_bc + t.beta_a * (1.0 - a2) * c.tau);
  return o;
}

GramParams bisep_gram(const SchmidtCoeffs& s, const Tolerances& tol) {
  const double ls = s.l1() * std::sin(s.phi);
  const double den = std::sqrt(ls * ls + s.l0() * s.l0());
  if (den <= tol.zero)
    throw Error(ErrorCode::DegenerateInput,
                "lambda_1^2 sin^2 phi + lambda_0^2 vanishes");
  GramParams g;
  g.a = 0.5 - ls / (2.0 * den);
  g.b = 0.5 + ls / (2.0 * den);
  g.k = s.l0() / (2.0 * den);
  g.theta = M_PI / 2.0;
  return g;
}

Measurement2 synth_bisep_measurement(const SchmidtCoeffs& coeffs,
                                     const Tolerances& tol) {
  return Measurement2::from_gram(Qubit::A, bisep_gram(coeffs, tol), tol);
}

Measurement2 synth_bisep_measurement(const PureState3& state,
                                     const Tolerances& tol) {
  const Decomposition d = schmidt_decompose(state, tol);
  return synth_bisep_measurement(d.coeffs, tol).composed_with(d.u_a);
}

Lemma2Bounds lemma2_bounds(const PureState3& state, const Measurement2& meas,
                           const Tolerances& tol, double slack) {
  if (meas.qubit() != Qubit::A)
    throw Error(ErrorCode::DegenerateInput, "measurement must act on qubit A");
  const CParams c = analyze(state, tol).c;
  const auto outcomes = measure(state, meas, tol);
  Lemma2Bounds r;
  double avg_tau = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    if (outcomes[i].degenerate)
      throw Error(ErrorCode::ZeroProbability, "outcome has zero probability");
    const double p = outcomes[i].probability;
    const CParams ci = analyze(*outcomes[i].state, tol).c;
    r.mid += p * ci.c_bc;
    avg_tau += p * std::sqrt(ci.tau);
    r.sum_p_alpha += std::sqrt(gram_det(meas.op(i)));
  }
  r.lhs = c.c_bc;
  r.rhs = std::sqrt(std::max(
      0.0, c.c_bc * c.c_bc + (1.0 - r.sum_p_alpha * r.sum_p_alpha) * c.tau));
  r.sum_after = r.mid * r.mid + avg_tau * avg_tau;
  r.sum_before = c.c_bc * c.c_bc + c.tau;
  r.holds = r.lhs <= r.mid + slack && r.mid <= r.rhs + slack &&
            r.sum_after <= r.sum_before + slack && r.sum_p_alpha >= -slack &&
            r.sum_p_alpha <= 1.0 + slack;
  return r;
}

Lemma4Check lemma4_check(const PureState3& state, const Measurement2& meas,
                         const Tolerances& tol, double slack) {
  const Decomposition d = schmidt_decompose(state, tol);
  const CParams c = c_params(d.coeffs);
  const auto outcomes = measure(state, meas, tol);
  Lemma4Check r;
  for (const auto& o : outcomes) {
    if (o.degenerate) continue;
    const CParams ci = analyze(*o.state, tol).c;
    r.lhs += o.probability * std::sqrt(ci.c_bc * ci.c_bc + ci.tau);
  }
  r.rhs = std::sqrt(c.c_bc * c.c_bc + c.tau);
  r.holds = r.lhs <= r.rhs + slack;
  r.saturated = std::abs(r.lhs - r.rhs) <= slack;
  if (meas.qubit() == Qubit::A) {
    const GramParams g = gram_in_frame(meas.op(0), d.u_a);
    const Complex w = bc_vector(d.coeffs);
    const double arg_w = std::abs(w) > 0.0 ? std::arg(w) : 0.0;
    const double lhs = -2.0 * g.k * std::cos(g.theta - arg_w) * c.c_bc;
    const double rhs = (g.b - g.a) * std::sqrt(c.tau);
    r.saturation_predicted = std::abs(lhs - rhs) <= 1e-8;
  }
  return r;
}

namespace {

StateClassTag fuzz_class(int i) {
  static constexpr StateClassTag kTags[] = {
      StateClassTag::Haar,          StateClassTag::Haar,
      StateClassTag::GhzType,       StateClassTag::WType,
      StateClassTag::BiseparableBC, StateClassTag::BiseparableAB,
      StateClassTag::Haar,          StateClassTag::GhzType};
  return kTags[i % 8];
}

FuzzReport finish(FuzzReport r) {
  r.pass = r.violations == 0;
  return r;
}

}  // namespace

FuzzReport fuzz_lemma1(int samples, std::uint64_t seed, const Tolerances& tol,
                       double bound) {
  Rng rng(seed);
  FuzzReport r;
  for (int i = 0; i < samples; ++i) {
    const PureState3 s = random_state(fuzz_class(i), rng);
    const Measurement2 m = random_measurement(Qubit::A, rng);
    const UpdateReport u = verify_update(s, m, tol);
    r.max_deviation = std::max(r.max_deviation, u.max_deviation);
    if (u.max_deviation > bound || u.probability_defect > 1e-12 ||
        !u.charges_match)
      ++r.violations;
    ++r.samples;
  }
  return finish(r);
}

FuzzReport fuzz_lemma2(int samples, std::uint64_t seed, const Tolerances& tol,
                       double slack) {
  Rng rng(seed);
  FuzzReport r;
  for (int i = 0; i < samples; ++i) {
    const PureState3 s = random_state(fuzz_class(i), rng);
    const Measurement2 m = random_measurement(Qubit::A, rng);
    Lemma2Bounds b;
    try {
      b = lemma2_bounds(s, m, tol, slack);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ZeroProbability) throw;
      continue;
    }
    const double excess =
        std::max({b.lhs - b.mid, b.mid - b.rhs, b.sum_after - b.sum_before});
    r.max_deviation = std::max(r.max_deviation, std::max(0.0, excess));
    if (!b.holds) ++r.violations;
    ++r.samples;
  }
  return finish(r);
}

FuzzReport fuzz_sum_p_alpha(int samples, std::uint64_t seed, double slack) {
  Rng rng(seed);
  FuzzReport r;
  const Tolerances tol;
  for (int i = 0; i < samples; ++i) {
    const PureState3 s = random_state(fuzz_class(i), rng);
    const Measurement2 m = random_measurement(Qubit::A, rng);
    const auto outcomes = measure(s, m, tol);
    double total = 0.0;
    for (std::size_t j = 0; j < 2; ++j) {
      if (outcomes[j].degenerate) continue;
      const double p = outcomes[j].probability;
      total += p * (std::sqrt(gram_det(m.op(j))) / p);
    }
    const double excess = std::max(-total, total - 1.0);
    r.max_deviation = std::max(r.max_deviation, std::max(0.0, excess));
    if (excess > slack) ++r.violations;
    ++r.samples;
  }
  return finish(r);
}

FuzzReport fuzz_lemma4(int samples, std::uint64_t seed, const Tolerances& tol,
                       double slack) {
  Rng rng(seed);
  FuzzReport r;
  for (int i = 0; i < samples; ++i) {
    const PureState3 s = random_state(fuzz_class(i), rng);
    const auto q = static_cast<Qubit>(i % 3);
    const Measurement2 m = random_measurement(q, rng);
    const Lemma4Check c = lemma4_check(s, m, tol, slack);
    r.max_deviation = std::max(r.max_deviation, std::max(0.0, c.lhs - c.rhs));
    if (!c.holds) ++r.violations;
    ++r.samples;
  }
  return finish(r);
}

}  // namespace tqlocc

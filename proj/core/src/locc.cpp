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


#include "tqlocc/locc.hpp"

#include <cmath>

#include "tqlocc/error.hpp"

namespace tqlocc {

namespace {

int sgn_tol(double x, double tol) {
  if (x > tol) return 1;
  if (x < -tol) return -1;
  return 0;
}

double pair_k(const KParams& k, Pair p) {
  switch (p) {
    case Pair::AB: return k.k_ab;
    case Pair::AC: return k.k_ac;
    case Pair::BC: return k.k_bc;
  }
  return 0.0;
}

// Witness for reaching a state whose only nonzero K is on `p`, scaled by r.
ZetaWitness pair_witness(const KParams& k, Pair p, double r) {
  ZetaWitness w;
  const double s = std::sqrt(r);
  w.zeta = 1.0;
  switch (p) {
    case Pair::AB: w.zeta_a = s; w.zeta_b = s; w.zeta_c = 0.0; break;
    case Pair::AC: w.zeta_a = s; w.zeta_b = 0.0; w.zeta_c = s; break;
    case Pair::BC: w.zeta_a = 0.0; w.zeta_b = s; w.zeta_c = s; break;
  }
  w.zeta_lower = zeta_lower(k, w.zeta_a, w.zeta_b, w.zeta_c);
  return w;
}

ZetaWitness vanishing_witness() {
  ZetaWitness w;
  w.zeta = 1.0;
  w.zeta_a = w.zeta_b = w.zeta_c = 0.0;
  w.zeta_lower = 0.0;
  return w;
}

double denominator(const KParams& k, double za, double zb, double zc) {
  return (k.k_ab - zc * k.tau) * (k.k_ac - zb * k.tau) * (k.k_bc - za * k.tau);
}

}  // namespace

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::Cond1NoSolution: return "cond1_no_solution";
    case Violation::ZetaOutOfRange: return "zeta_out_of_range";
    case Violation::ChargeMismatch: return "charge_mismatch";
    case Violation::ZetaNotTilde: return "zeta_not_tilde";
    case Violation::ChargeMagnitude: return "charge_magnitude";
  }
  return "?";
}

std::string_view to_string(LoccCase c) {
  switch (c) {
    case LoccCase::A: return "A";
    case LoccCase::B: return "B";
    case LoccCase::C: return "C";
    case LoccCase::D: return "D";
  }
  return "?";
}

double zeta_lower(const KParams& k, double za, double zb, double zc) {
  const double jap = (k.k_ab - k.tau) * (k.k_ac - k.tau) * (k.k_bc - k.tau);
  const double den = denominator(k, za, zb, zc);
  return den > 0.0 ? jap / den : 0.0;
}

double zeta_tilde(const KParams& k, const DerivedParams& d, double za,
                  double zb, double zc) {
  const double sin_part = d.k_ap * (d.j_ap - k.j5 * k.j5);
  const double num = sin_part + d.delta_j * d.j_ap;
  const double den = sin_part + d.delta_j * denominator(k, za, zb, zc);
  return num / den;
}

LoccCase classify_case(const StateClass& src, const StateClass& dst) {
  const bool ghz = src.kind == StateKind::GhzType;
  if (src.ep_definite && ghz && dst.ep_definite) return LoccCase::A;
  if (src.ep_definite && !dst.ep_definite) return LoccCase::B;
  if (!src.ep_definite && ghz) return LoccCase::C;
  return LoccCase::D;
}

LoccVerdict dlocc_feasible(const PureState3& src, const PureState3& dst,
                           const Tolerances& tol) {
  return dlocc_feasible(analyze(src, tol), analyze(dst, tol), tol);
}

LoccVerdict dlocc_feasible(const InvariantReport& src,
                           const InvariantReport& dst, const Tolerances& tol) {
  LoccVerdict v;
  v.which = classify_case(src.cls, dst.cls);
  auto fail = [&](Violation why) {
    v.feasible = false;
    v.violated = why;
    return v;
  };
  auto pass = [&](const ZetaWitness& w) {
    v.feasible = true;
    v.witness = w;
    return v;
  };

  const StateKind s = src.cls.kind, t = dst.cls.kind;
  const KParams& k = src.k;
  const KParams& kp = dst.k;
  const double slack = tol.zero;

  if (t == StateKind::FullSeparable) {
    if (s == StateKind::FullSeparable) {
      ZetaWitness w;
      w.zeta_lower = 0.0;
      return pass(w);
    }
    return pass(vanishing_witness());
  }
  if (s == StateKind::FullSeparable) return fail(Violation::Cond1NoSolution);

  if (t == StateKind::Biseparable) {
    const Pair p = *dst.cls.pair;
    if (s == StateKind::Biseparable && *src.cls.pair != p)
      return fail(Violation::Cond1NoSolution);
    const double have = pair_k(k, p), want = pair_k(kp, p);
    if (want > have + slack) return fail(Violation::Cond1NoSolution);
    return pass(pair_witness(k, p, std::min(1.0, want / have)));
  }

  // Target is truly tripartite from here on.
  if (s == StateKind::Biseparable || s != t)
    return fail(Violation::Cond1NoSolution);

  if (s == StateKind::WType) {
    const WCoords x = w_coords(src.c, tol);
    const WCoords y = w_coords(dst.c, tol);
    if (y.x1 > x.x1 + slack || y.x2 > x.x2 + slack || y.x3 > x.x3 + slack)
      return fail(Violation::Cond1NoSolution);
    ZetaWitness w;
    w.zeta = 1.0;
    w.zeta_a = std::min(1.0, (y.x1 / x.x1) * (y.x1 / x.x1));
    w.zeta_b = std::min(1.0, (y.x2 / x.x2) * (y.x2 / x.x2));
    w.zeta_c = std::min(1.0, (y.x3 / x.x3) * (y.x3 / x.x3));
    w.zeta_lower = zeta_lower(k, w.zeta_a, w.zeta_b, w.zeta_c);
    return pass(w);
  }

  // GHZ-type to GHZ-type: the witness is unique.
  ZetaWitness w;
  const double ratio = kp.tau / k.tau;
  w.zeta_a = k.k_bc * ratio / kp.k_bc;
  w.zeta_b = k.k_ac * ratio / kp.k_ac;
  w.zeta_c = k.k_ab * ratio / kp.k_ab;
  w.zeta = ratio / (w.zeta_a * w.zeta_b * w.zeta_c);
  w.zeta_lower = zeta_lower(k, w.zeta_a, w.zeta_b, w.zeta_c);
  if (src.cls.zeta_tilde_definite)
    w.zeta_tilde = zeta_tilde(k, src.d, w.zeta_a, w.zeta_b, w.zeta_c);

  if (w.zeta_a > 1.0 + slack || w.zeta_b > 1.0 + slack ||
      w.zeta_c > 1.0 + slack) {
    return fail(Violation::Cond1NoSolution);
  }
  if (std::abs(kp.j5 - ratio * k.j5) > tol.condition) {
    return fail(Violation::Cond1NoSolution);
  }
  if (w.zeta > 1.0 + slack || w.zeta < w.zeta_lower - slack)
    return fail(Violation::ZetaOutOfRange);

  if (dst.cls.ep_definite) {
    if (src.cls.zeta_tilde_definite) {
      if (src.charge != dst.charge) return fail(Violation::ChargeMismatch);
      if (std::abs(w.zeta - *w.zeta_tilde) > tol.condition)
        return fail(Violation::ZetaNotTilde);
    } else {
      const int want = sgn_tol((1.0 - w.zeta) * (w.zeta - w.zeta_lower),
                               tol.condition);
      if (std::abs(to_int(dst.charge)) != want)
        return fail(Violation::ChargeMagnitude);
    }
  }
  return pass(w);
}

int min_measurements(const PureState3& src, const PureState3& dst,
                     const Tolerances& tol) {
  return min_measurements(analyze(src, tol), analyze(dst, tol), tol);
}

int min_measurements(const InvariantReport& src, const InvariantReport& dst,
                     const Tolerances& tol) {
  if (!dlocc_feasible(src, dst, tol).feasible)
    throw Error(ErrorCode::NotFeasible, "transformation is not executable");
  if (src.cls.truly_tripartite()) return dst.cls.truly_tripartite() ? 3 : 2;
  if (src.cls.kind == StateKind::Biseparable) return 1;
  return 0;
}

}  // namespace tqlocc

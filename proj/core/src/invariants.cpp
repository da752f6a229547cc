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


#include "tqlocc/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "tqlocc/error.hpp"

namespace tqlocc {

namespace {

int sgn_tol(double x, double tol) {
  if (x > tol) return 1;
  if (x < -tol) return -1;
  return 0;
}

}  // namespace

Charge charge_from_int(int v) {
  if (v > 0) return Charge::Positive;
  if (v < 0) return Charge::Negative;
  return Charge::Zero;
}

std::string_view to_string(Pair p) {
  switch (p) {
    case Pair::AB: return "AB";
    case Pair::AC: return "AC";
    case Pair::BC: return "BC";
  }
  return "?";
}

std::string_view to_string(StateKind k) {
  switch (k) {
    case StateKind::FullSeparable: return "full_separable";
    case StateKind::Biseparable: return "biseparable";
    case StateKind::WType: return "w_type";
    case StateKind::GhzType: return "ghz_type";
  }
  return "?";
}

CParams c_params(const SchmidtCoeffs& s) {
  const double l0 = s.l0(), l1 = s.l1(), l2 = s.l2(), l3 = s.l3(), l4 = s.l4();
  const Complex e = std::polar(1.0, s.phi);
  const Complex w = l1 * l4 * e - l2 * l3;
  CParams c;
  c.c_ab = 2.0 * l0 * l3;
  c.c_ac = 2.0 * l0 * l2;
  c.c_bc = 2.0 * std::abs(w);
  c.tau = 4.0 * l0 * l0 * l4 * l4;
  c.j5 = 4.0 * l0 * l0 *
         (std::norm(w) + l2 * l2 * l3 * l3 - l1 * l1 * l4 * l4);
  return c;
}

Charge q_e(const SchmidtCoeffs& coeffs, const CParams& c,
           const Tolerances& tol) {
  const double k_bc = c.c_bc * c.c_bc + c.tau;
  if (k_bc <= tol.zero) return Charge::Zero;
  const double bracket = coeffs.l0() * coeffs.l0() - (c.tau + c.j5) / (2.0 * k_bc);
  return charge_from_int(sgn_tol(std::sin(coeffs.phi), tol.zero) *
                         sgn_tol(bracket, tol.zero));
}

KParams k_params(const CParams& c) {
  KParams k;
  k.k_ab = c.c_ab * c.c_ab + c.tau;
  k.k_ac = c.c_ac * c.c_ac + c.tau;
  k.k_bc = c.c_bc * c.c_bc + c.tau;
  k.tau = c.tau;
  k.j5 = c.j5;
  return k;
}

DerivedParams derived(const KParams& k, const Tolerances& tol) {
  DerivedParams d;
  d.j_ap = std::max(0.0, k.k_ab - k.tau) * std::max(0.0, k.k_ac - k.tau) *
           std::max(0.0, k.k_bc - k.tau);
  d.k_ap = k.k_ab * k.k_ac * k.k_bc;
  d.k5 = k.tau + k.j5;
  const double dj = d.k5 * d.k5 - d.k_ap;
  if (dj < -tol.zero)
    throw Error(ErrorCode::NegativeDiscriminant,
                "K5^2 - K_ap = " + std::to_string(dj));
  d.delta_j = std::max(0.0, dj);
  return d;
}

std::optional<double> ep_phase(const CParams& c, const Tolerances& tol) {
  if (c.c_ab <= tol.zero || c.c_ac <= tol.zero || c.c_bc <= tol.zero)
    return std::nullopt;
  const double cosv = std::clamp(c.j5 / (c.c_ab * c.c_ac * c.c_bc), -1.0, 1.0);
  return std::acos(cosv);
}

StateClass classify(const CParams& c, const Tolerances& tol) {
  StateClass s;
  const bool ab = c.c_ab > tol.zero, ac = c.c_ac > tol.zero,
             bc = c.c_bc > tol.zero;
  const int n = int(ab) + int(ac) + int(bc);
  if (c.tau > tol.zero) {
    s.kind = StateKind::GhzType;
  } else if (n >= 2) {
    s.kind = StateKind::WType;
  } else if (n == 1) {
    s.kind = StateKind::Biseparable;
    s.pair = ab ? Pair::AB : (ac ? Pair::AC : Pair::BC);
  } else {
    s.kind = StateKind::FullSeparable;
  }
  s.ep_definite = n == 3;
  const DerivedParams d = derived(k_params(c), tol);
  // Relative tests: both quantities are of eighth order in the
  // coefficients and shrink quickly for weakly entangled states. The floor
  // covers states where everything is rounding noise.
  const double floor = tol.zero * tol.zero;
  s.zeta_tilde_definite =
      !(d.delta_j <= tol.zero * (d.k5 * d.k5 + floor) &&
        d.j_ap - c.j5 * c.j5 <= tol.zero * (d.j_ap + floor));
  return s;
}

StateClass classify(const PureState3& state, const Tolerances& tol) {
  return classify(c_params(schmidt_decompose(state, tol).coeffs), tol);
}

InvariantReport analyze(const SchmidtCoeffs& coeffs, const Tolerances& tol) {
  InvariantReport r;
  r.coeffs = coeffs;
  r.c = c_params(coeffs);
  r.k = k_params(r.c);
  r.d = derived(r.k, tol);
  r.charge = q_e(coeffs, r.c, tol);
  r.phi5 = ep_phase(r.c, tol);
  r.cls = classify(r.c, tol);
  return r;
}

InvariantReport analyze(const PureState3& state, const Tolerances& tol) {
  return analyze(schmidt_decompose(state, tol).coeffs, tol);
}

LuComparison compare_lu(const PureState3& a, const PureState3& b,
                        const Tolerances& tol) {
  const InvariantReport ra = analyze(a, tol);
  const InvariantReport rb = analyze(b, tol);
  LuComparison out;
  const auto va = ra.c.as_array(), vb = rb.c.as_array();
  bool same = true;
  for (std::size_t i = 0; i < 5; ++i) {
    out.delta[i] = vb[i] - va[i];
    same = same && std::abs(out.delta[i]) <= tol.eq;
  }
  out.charge_a = to_int(ra.charge);
  out.charge_b = to_int(rb.charge);
  out.equivalent = same && out.charge_a == out.charge_b;
  return out;
}

bool lu_equivalent(const PureState3& a, const PureState3& b,
                   const Tolerances& tol) {
  return compare_lu(a, b, tol).equivalent;
}

}  // namespace tqlocc

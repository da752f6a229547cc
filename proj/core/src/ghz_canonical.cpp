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


#include <cmath>
#include <limits>

#include "tqlocc/error.hpp"
#include "tqlocc/locc.hpp"

namespace tqlocc {

namespace {

bool is_zero(const ExtendedReal& x) { return x.is_finite() && x.value == 0.0; }
bool is_exceptional(const ExtendedReal& x) {
  return x.kind == ExtendedReal::Kind::Infinite || is_zero(x);
}
bool same_value(const ExtendedReal& x, const ExtendedReal& y) {
  if (x.kind != y.kind) return false;
  return !x.is_finite() || x.value == y.value;
}

bool ratio_matches(double num, double den, double r, double extra = 0.0) {
  return std::abs(num / den - r) <= (1e-8 + extra) * std::max(1.0, std::abs(r));
}

// Relative rounding error that s inherits from the invariants: its size
// follows sin^2 phi5 = (J_ap - J5^2) / J_ap, which cancels for small phases.
double s_rounding(const InvariantReport& r) {
  const double gap = r.d.j_ap - r.c.j5 * r.c.j5;
  if (!(gap > 0.0)) return 0.0;
  return 64.0 * std::numeric_limits<double>::epsilon() * r.d.j_ap / gap;
}

}  // namespace

GhzCanonical ghz_canonical(const PureState3& state, const Tolerances& tol) {
  return ghz_canonical(analyze(state, tol), tol);
}

GhzCanonical ghz_canonical(const InvariantReport& r, const Tolerances& tol) {
  if (r.cls.kind != StateKind::GhzType)
    throw Error(ErrorCode::NotGhzType, "tangle is zero");
  GhzCanonical g;
  const CParams& c = r.c;
  const KParams& k = r.k;
  const DerivedParams& d = r.d;
  g.c_a = c.c_bc / std::sqrt(k.k_bc);
  g.c_b = c.c_ac / std::sqrt(k.k_ac);
  g.c_c = c.c_ab / std::sqrt(k.k_ab);
  g.z_abs = (d.k5 + std::sqrt(d.delta_j)) / std::sqrt(d.k_ap);

  if (!r.cls.ep_definite) {
    g.n = ExtendedReal::indefinite();
    g.s = ExtendedReal::indefinite();
    return g;
  }

  const SchmidtCoeffs& s = r.coeffs;
  const Complex w = s.l2() * s.l3() - s.l1() * s.l4() * std::polar(1.0, s.phi);
  const double l0sq = s.l0() * s.l0();
  const Complex z0 = -(std::sqrt(k.k_ab * k.k_ac) /
                       (2.0 * l0sq * std::sqrt(k.k_bc))) *
                     (w / std::abs(w));
  const Complex z = std::abs(z0) >= 1.0 ? z0 : 1.0 / z0;
  g.z = std::polar(g.z_abs, std::arg(z));

  // Scale-free zero tests, so that weakly entangled states are not
  // rounded onto the real axis or the unit circle.
  const double unit_re = std::cos(std::arg(*g.z));
  const double unit_im = std::sin(std::arg(*g.z));
  const bool dj_zero = d.delta_j <= tol.zero * d.k5 * d.k5;
  const bool sin_zero = std::abs(unit_im) <= tol.zero;
  const double mod2 = g.z_abs * g.z_abs;
  if (dj_zero && sin_zero)
    g.s = ExtendedReal::indefinite();
  else if (dj_zero)
    g.s = ExtendedReal::infinite();
  else if (sin_zero)
    g.s = ExtendedReal::finite(0.0);
  else
    g.s = ExtendedReal::finite(2.0 * g.z->imag() / (mod2 - 1.0));

  if (std::abs(unit_re) <= tol.zero)
    g.n = ExtendedReal::finite(0.0);
  else
    g.n = ExtendedReal::finite(2.0 * g.z->real() / (mod2 + 1.0));
  return g;
}

NsParams ns_params(const GhzCanonical& g) { return {g.n, g.s}; }

NsParams ns_from_z(std::complex<double> z, const Tolerances& tol) {
  NsParams p;
  const double mod2 = std::norm(z);
  const double re = std::abs(z.real()) <= tol.zero ? 0.0 : z.real();
  const double im = std::abs(z.imag()) <= tol.zero ? 0.0 : z.imag();
  p.n = ExtendedReal::finite(2.0 * re / (mod2 + 1.0));
  if (std::abs(std::sqrt(mod2) - 1.0) <= tol.zero)
    p.s = im == 0.0 ? ExtendedReal::indefinite() : ExtendedReal::infinite();
  else
    p.s = ExtendedReal::finite(2.0 * im / (mod2 - 1.0));
  return p;
}

WCoords w_coords(const CParams& c, const Tolerances& tol) {
  if (c.tau > tol.zero || c.c_ab <= tol.zero || c.c_ac <= tol.zero ||
      c.c_bc <= tol.zero)
    throw Error(ErrorCode::NotWType, "state is not W-type");
  WCoords x;
  x.x1 = std::sqrt(c.c_ab * c.c_ac / (2.0 * c.c_bc));
  x.x2 = std::sqrt(c.c_ab * c.c_bc / (2.0 * c.c_ac));
  x.x3 = std::sqrt(c.c_ac * c.c_bc / (2.0 * c.c_ab));
  return x;
}

bool ghz_oracle(const PureState3& src, const PureState3& dst,
                const Tolerances& tol) {
  return ghz_oracle(analyze(src, tol), analyze(dst, tol), tol);
}

bool ghz_oracle(const InvariantReport& src, const InvariantReport& dst,
                const Tolerances& tol) {
  const GhzCanonical g = ghz_canonical(src, tol);
  const GhzCanonical h = ghz_canonical(dst, tol);
  constexpr double kSlack = 1e-9;
  if (h.c_a < g.c_a - kSlack || h.c_b < g.c_b - kSlack ||
      h.c_c < g.c_c - kSlack)
    return false;

  const bool src_def = src.cls.ep_definite;
  const bool dst_def = dst.cls.ep_definite;
  if (src_def && dst_def) {
    const double r = (g.c_a * g.c_b * g.c_c) / (h.c_a * h.c_b * h.c_c);
    if (g.s.kind != ExtendedReal::Kind::Indefinite) {
      if (h.s.kind == ExtendedReal::Kind::Indefinite) return false;
      if (is_exceptional(g.s) || is_exceptional(h.s)) {
        if (!same_value(g.s, h.s)) return false;
      } else if (!ratio_matches(h.s.value, g.s.value, r,
                                s_rounding(src) + s_rounding(dst))) {
        return false;
      }
    }
    if (is_zero(g.n) || is_zero(h.n)) return is_zero(g.n) && is_zero(h.n);
    return ratio_matches(h.n.value, g.n.value, r);
  }
  if (!src_def && dst_def) {
    // |z| = 1 for the source and a purely imaginary z' for the target.
    return std::abs(g.z_abs - 1.0) <= 1e-6 && is_zero(h.n);
  }
  if (!src_def && !dst_def) return h.z_abs >= g.z_abs * (1.0 - 1e-12);
  return false;
}

}  // namespace tqlocc

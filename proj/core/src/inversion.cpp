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


#include <algorithm>
#include <cmath>

#include "tqlocc/error.hpp"
#include "tqlocc/invariants.hpp"

namespace tqlocc {

namespace {

constexpr double kNormSlack = 1e-6;

[[noreturn]] void inconsistent(const std::string& why) {
  throw Error(ErrorCode::Inconsistent, why);
}

SchmidtCoeffs single_pair(double c, int slot) {
  SchmidtCoeffs s;
  const double l0sq = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  s.lambda = {std::sqrt(l0sq), 0.0, 0.0, 0.0, 0.0};
  s.lambda[slot] = c / (2.0 * s.lambda[0]);
  return s;
}

// Coefficients on the branch with lambda_0^2 = l0sq. `real_phase` forces
// sin(phi) = 0, which Q_e = 0 implies whenever the two roots differ.
SchmidtCoeffs build(const CParams& c, double l0sq,
                    bool real_phase, const Tolerances& tol) {
  SchmidtCoeffs s;
  if (l0sq <= tol.zero) {
    // |1> on A times a two-qubit state on BC.
    const double l1sq =
        0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c.c_bc * c.c_bc)));
    const double l1 = std::sqrt(l1sq);
    s.lambda = {0.0, l1, 0.0, 0.0, c.c_bc / (2.0 * l1)};
    return s;
  }
  const double l0 = std::sqrt(l0sq);
  const double l2 = c.c_ac / (2.0 * l0);
  const double l3 = c.c_ab / (2.0 * l0);
  const double l4 = std::sqrt(std::max(0.0, c.tau)) / (2.0 * l0);
  const double rest = (c.c_ab * c.c_ab + c.c_ac * c.c_ac + c.tau) / (4.0 * l0sq);
  const double l1sq_norm = 1.0 - l0sq - rest;
  if (l1sq_norm < -tol.zero)
    inconsistent("lambda_1^2 = " + std::to_string(l1sq_norm) + " < 0");

  double l1 = 0.0, phi = 0.0;
  if (l1sq_norm >= 1e-10 || l4 < 1e-3) {
    l1 = std::sqrt(std::max(0.0, l1sq_norm));
    const double den = 2.0 * l1 * l2 * l3 * l4;
    const double num = l1 * l1 * l4 * l4 + l2 * l2 * l3 * l3 - c.c_bc * c.c_bc / 4.0;
    if (l4 > tol.zero && den > 0.0) {
      if (std::abs(num) > den + tol.zero)
        inconsistent("|cos phi| exceeds 1");
      phi = std::acos(std::clamp(num / den, -1.0, 1.0));
    }
  } else {
    // lambda_1 lambda_4 e^{i phi} = lambda_2 lambda_3 + w with
    // |w| = C_BC / 2 and Re w fixed by J5.
    const double half = c.c_bc / 2.0;
    const double p23 = l2 * l3;
    double u = half;
    if (p23 > tol.zero) u = -c.j5 / (8.0 * l0sq * p23);
    if (std::abs(u) > half + tol.zero) inconsistent("J5 incompatible with C_BC");
    u = std::clamp(u, -half, half);
    const double v = std::sqrt(std::max(0.0, half * half - u * u));
    const Complex x(p23 + u, v);
    l1 = std::abs(x) / l4;
    phi = std::abs(x) > 0.0 ? std::arg(x) : 0.0;
  }
  if (real_phase) phi = std::cos(phi) >= 0.0 ? 0.0 : M_PI;

  s.lambda = {l0, l1, l2, l3, l4};
  s.phi = std::clamp(phi, 0.0, M_PI);
  for (double x : s.lambda)
    if (x < tol.zero) s.phi = 0.0;
  return s;
}

double invariant_error(const SchmidtCoeffs& s, const CParams& c) {
  const auto got = c_params(s).as_array();
  const auto want = c.as_array();
  double err = 0.0;
  for (std::size_t i = 0; i < 5; ++i)
    err = std::max(err, std::abs(got[i] - want[i]));
  return err;
}

bool reproduces(const SchmidtCoeffs& s, const CParams& c, Charge q,
                const Tolerances& tol) {
  double n2 = 0.0;
  for (double x : s.lambda) n2 += x * x;
  if (std::abs(n2 - 1.0) > kNormSlack) return false;
  if (invariant_error(s, c) > tol.eq) return false;
  return q_e(s, c_params(s), tol) == q;
}

// Q_e = 0 means sin(phi) = 0 or Delta_J = 0. A Delta_J at rounding level
// can not tell the two apart, so keep whichever branch fits better.
std::vector<SchmidtCoeffs> neutral_pair(const CParams& c, const KParams& k,
                                        const DerivedParams& d,
                                        const std::array<double, 2>& roots,
                                        const Tolerances& tol) {
  std::vector<SchmidtCoeffs> split_pair, merged;
  double split_err = HUGE_VAL, merged_err = HUGE_VAL;
  try {
    split_pair = {build(c, roots[0], true, tol), build(c, roots[1], true, tol)};
    split_err = std::max(invariant_error(split_pair[0], c),
                         invariant_error(split_pair[1], c));
  } catch (const Error&) {
  }
  try {
    const SchmidtCoeffs mid = build(c, d.k5 / (2.0 * k.k_bc), false, tol);
    merged = {mid, mid};
    merged_err = invariant_error(mid, c);
  } catch (const Error&) {
  }
  if (split_pair.empty() && merged.empty())
    inconsistent("no coefficient set reproduces the invariants");
  return split_err <= merged_err ? split_pair : merged;
}

}  // namespace

std::array<double, 2> lambda0_squared_roots(const KParams& k,
                                            const DerivedParams& d) {
  if (k.k_bc <= 0.0) return {0.0, 0.0};
  const double sq = std::sqrt(std::max(0.0, d.delta_j));
  const double plus = (d.k5 + sq) / (2.0 * k.k_bc);
  const double minus = plus > 0.0
                           ? d.k_ap / (4.0 * k.k_bc * k.k_bc * plus)
                           : std::max(0.0, (d.k5 - sq) / (2.0 * k.k_bc));
  return {plus, minus};
}

std::vector<SchmidtCoeffs> coeffs_from_invariants(const CParams& c, Charge q,
                                                  const Tolerances& tol) {
  for (double x : c.as_array())
    if (!std::isfinite(x))
      throw Error(ErrorCode::NonFinite, "invariant is not finite");
  for (double x : {c.c_ab, c.c_ac, c.c_bc, c.tau})
    if (x < -tol.zero || x > 1.0 + tol.zero)
      inconsistent("invariant outside [0, 1]");

  const KParams k = k_params(c);
  std::vector<SchmidtCoeffs> out;

  if (k.k_bc <= tol.zero) {
    if (c.c_ab > tol.zero && c.c_ac > tol.zero)
      inconsistent("C_AB and C_AC cannot both be nonzero without tangle or C_BC");
    if (c.c_ab > tol.zero)
      out.push_back(single_pair(c.c_ab, 3));
    else if (c.c_ac > tol.zero)
      out.push_back(single_pair(c.c_ac, 2));
    else
      out.push_back(SchmidtCoeffs{});
  } else {
    DerivedParams d;
    try {
      d = derived(k, tol);
    } catch (const Error& e) {
      inconsistent(e.what());
    }
    const auto roots = lambda0_squared_roots(k, d);
    const double split = std::sqrt(d.delta_j) / (2.0 * k.k_bc);
    switch (q) {
      case Charge::Positive:
        out.push_back(build(c, roots[0], false, tol));
        break;
      case Charge::Negative:
        out.push_back(build(c, roots[1], false, tol));
        break;
      case Charge::Zero:
        if (split <= tol.zero) {
          const double mid = d.k5 / (2.0 * k.k_bc);
          out.push_back(build(c, mid, false, tol));
          out.push_back(out.back());
        } else {
          out = neutral_pair(c, k, d, roots, tol);
        }
        break;
    }
  }
  for (const auto& s : out)
    if (!reproduces(s, c, q, tol))
      inconsistent("no coefficient set reproduces the invariants");
  return out;
}

}  // namespace tqlocc

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

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>

#include "tqlocc/invariants.hpp"
#include "tqlocc/state.hpp"

namespace tqlocc {

/// Scaling factors of the diagonal relation between K-parameter vectors:
///
///   K'_AB = z zA zB K_AB,  K'_AC = z zA zC K_AC,  K'_BC = z zB zC K_BC,
///   tau'  = z zA zB zC tau, J5' = z zA zB zC J5.
struct ZetaWitness {
  double zeta = 1.0;
  double zeta_a = 1.0;
  double zeta_b = 1.0;
  double zeta_c = 1.0;
  double zeta_lower = 0.0;
  std::optional<double> zeta_tilde;
};

enum class Violation {
  Cond1NoSolution,
  ZetaOutOfRange,
  ChargeMismatch,
  ZetaNotTilde,
  ChargeMagnitude,
};
std::string_view to_string(Violation v);

/// Case split of the feasibility proof: A (EP-definite GHZ-type source,
/// EP-definite target), B (EP-definite source, EP-indefinite target),
/// C (EP-indefinite GHZ-type source), D (zero-tangle source).
enum class LoccCase { A, B, C, D };
std::string_view to_string(LoccCase c);

struct LoccVerdict {
  bool feasible = false;
  LoccCase which = LoccCase::D;
  std::optional<ZetaWitness> witness;
  std::optional<Violation> violated;
};

/// J_ap / ((K_AB - zC tau)(K_AC - zB tau)(K_BC - zA tau)); zero when the
/// denominator vanishes (then J_ap vanishes too).
double zeta_lower(const KParams& k, double zeta_a, double zeta_b,
                  double zeta_c);

/// The pinned zeta for charge-definite sources. Uses the same pairing of
/// zeta factors as zeta_lower.
double zeta_tilde(const KParams& k, const DerivedParams& d, double zeta_a,
                  double zeta_b, double zeta_c);

LoccCase classify_case(const StateClass& src, const StateClass& dst);

LoccVerdict dlocc_feasible(const PureState3& src, const PureState3& dst,
                           const Tolerances& tol = {});
LoccVerdict dlocc_feasible(const InvariantReport& src,
                           const InvariantReport& dst,
                           const Tolerances& tol = {});

/// Table lookup on (source, target) kinds. Throws NotFeasible when the
/// transformation is not executable.
int min_measurements(const PureState3& src, const PureState3& dst,
                     const Tolerances& tol = {});
int min_measurements(const InvariantReport& src, const InvariantReport& dst,
                     const Tolerances& tol = {});

/// A real number that may also be infinite or undefined (0/0).
struct ExtendedReal {
  enum class Kind { Finite, Infinite, Indefinite };
  Kind kind = Kind::Indefinite;
  double value = 0.0;

  static ExtendedReal finite(double v) { return {Kind::Finite, v}; }
  static ExtendedReal infinite() { return {Kind::Infinite, 0.0}; }
  static ExtendedReal indefinite() { return {Kind::Indefinite, 0.0}; }
  bool is_finite() const { return kind == Kind::Finite; }
};

/// (|0~0~0~> + z|1~1~1~>)/sqrt(N) with c_i = <0~_i|1~_i>. The
/// representative with |z| >= 1 is stored.
struct GhzCanonical {
  double c_a = 0.0;
  double c_b = 0.0;
  double c_c = 0.0;
  double z_abs = 1.0;
  /// Empty when the entanglement phase is indefinite.
  std::optional<std::complex<double>> z;
  ExtendedReal n;
  ExtendedReal s;
};

/// Throws NotGhzType when tau <= tol.zero.
GhzCanonical ghz_canonical(const PureState3& state, const Tolerances& tol = {});
GhzCanonical ghz_canonical(const InvariantReport& report,
                           const Tolerances& tol = {});

struct NsParams {
  ExtendedReal n;
  ExtendedReal s;
};

NsParams ns_params(const GhzCanonical& g);

/// n and s directly from z, for a known complex z with |z| >= 1.
NsParams ns_from_z(std::complex<double> z, const Tolerances& tol = {});

struct WCoords {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

/// Throws NotWType unless tau <= tol.zero and every concurrence > tol.zero.
WCoords w_coords(const CParams& c, const Tolerances& tol = {});

/// Independent check for GHZ-type pairs through the canonical form
/// parameters (c_i, z, n, s). Throws NotGhzType.
bool ghz_oracle(const PureState3& src, const PureState3& dst,
                const Tolerances& tol = {});
bool ghz_oracle(const InvariantReport& src, const InvariantReport& dst,
                const Tolerances& tol = {});

}  // namespace tqlocc

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
#include <optional>
#include <string_view>
#include <vector>

#include "tqlocc/schmidt.hpp"
#include "tqlocc/state.hpp"

namespace tqlocc {

/// Concurrences, tangle and J5.
struct CParams {
  double c_ab = 0.0;
  double c_ac = 0.0;
  double c_bc = 0.0;
  double tau = 0.0;
  double j5 = 0.0;

  double j_ap() const { return c_ab * c_ab * c_ac * c_ac * c_bc * c_bc; }
  std::array<double, 5> as_array() const { return {c_ab, c_ac, c_bc, tau, j5}; }
};

/// K_xy = C_xy^2 + tau, plus tau and J5.
struct KParams {
  double k_ab = 0.0;
  double k_ac = 0.0;
  double k_bc = 0.0;
  double tau = 0.0;
  double j5 = 0.0;
};

struct DerivedParams {
  double j_ap = 0.0;
  double k_ap = 0.0;
  double k5 = 0.0;
  double delta_j = 0.0;
};

enum class Charge : int { Negative = -1, Zero = 0, Positive = 1 };

constexpr int to_int(Charge q) { return static_cast<int>(q); }
Charge charge_from_int(int v);

enum class Pair { AB, AC, BC };
std::string_view to_string(Pair p);

enum class StateKind { FullSeparable, Biseparable, WType, GhzType };
std::string_view to_string(StateKind k);

struct StateClass {
  StateKind kind = StateKind::FullSeparable;
  std::optional<Pair> pair;  // set iff kind == Biseparable
  bool ep_definite = false;
  bool zeta_tilde_definite = false;

  bool truly_tripartite() const {
    return kind == StateKind::GhzType || kind == StateKind::WType;
  }
};

CParams c_params(const SchmidtCoeffs& coeffs);

/// Sign of sin(phi) * (l0^2 - K5 / (2 K_BC)); each factor below tol.zero
/// counts as zero. Valid for positive and negative decompositions alike.
/// Returns Zero when K_BC <= tol.zero.
Charge q_e(const SchmidtCoeffs& coeffs, const CParams& c,
           const Tolerances& tol = {});

KParams k_params(const CParams& c);

/// Throws NegativeDiscriminant if Delta_J < -tol.zero.
DerivedParams derived(const KParams& k, const Tolerances& tol = {});

/// Entanglement phase in [0, pi]; nullopt when any concurrence is zero.
std::optional<double> ep_phase(const CParams& c, const Tolerances& tol = {});

StateClass classify(const CParams& c, const Tolerances& tol = {});
StateClass classify(const PureState3& state, const Tolerances& tol = {});

/// Everything computed from one decomposition.
struct InvariantReport {
  SchmidtCoeffs coeffs;
  CParams c;
  KParams k;
  DerivedParams d;
  Charge charge = Charge::Zero;
  std::optional<double> phi5;
  StateClass cls;
};

InvariantReport analyze(const PureState3& state, const Tolerances& tol = {});
InvariantReport analyze(const SchmidtCoeffs& coeffs,
                        const Tolerances& tol = {});

struct LuComparison {
  bool equivalent = false;
  /// b - a for (C_AB, C_AC, C_BC, tau, J5).
  std::array<double, 5> delta{};
  int charge_a = 0;
  int charge_b = 0;
};

LuComparison compare_lu(const PureState3& a, const PureState3& b,
                        const Tolerances& tol = {});
bool lu_equivalent(const PureState3& a, const PureState3& b,
                   const Tolerances& tol = {});

/// Positive-decomposition coefficients realizing (c, q). One set for
/// q != 0, the (l0+, l0-) pair for q == 0. Throws Inconsistent if no
/// state has these invariants.
std::vector<SchmidtCoeffs> coeffs_from_invariants(const CParams& c, Charge q,
                                                  const Tolerances& tol = {});

/// Both roots (l0+)^2 >= (l0-)^2 of the l0 quadratic; requires K_BC > 0.
std::array<double, 2> lambda0_squared_roots(const KParams& k,
                                            const DerivedParams& d);

}  // namespace tqlocc

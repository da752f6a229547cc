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
#include <cstdint>
#include <optional>

#include "tqlocc/invariants.hpp"
#include "tqlocc/state.hpp"

namespace tqlocc {

/// Closed-form effect of one measurement operator on qubit A of a state
/// given in canonical form.
struct OutcomePrediction {
  double p = 0.0;
  double alpha = 0.0;  // sqrt(ab - k^2) / p
  CParams c;
  /// Canonical coefficients of the normalized outcome. May be a negative
  /// decomposition (phi < 0).
  SchmidtCoeffs coeffs;
};

struct UpdatePrediction {
  std::array<OutcomePrediction, 2> outcomes;
  double sum_p_alpha = 0.0;
};

/// Prediction for the operator with Gram parameters `gram`, acting on
/// qubit A of state_from_schmidt(coeffs). Throws ZeroProbability when
/// p <= tol.zero.
OutcomePrediction predict_outcome(const SchmidtCoeffs& coeffs,
                                  const GramParams& gram,
                                  const Tolerances& tol = {});

/// Both outcomes of the two-outcome measurement {gram, I - gram}.
UpdatePrediction predict_update(const SchmidtCoeffs& coeffs,
                                const GramParams& gram,
                                const Tolerances& tol = {});

struct UpdateReport {
  /// Max |predicted - recomputed| over C_AB, C_AC, C_BC, tau, J5 and p,
  /// over non-degenerate outcomes.
  double max_deviation = 0.0;
  /// |p0 + p1 - 1|.
  double probability_defect = 0.0;
  bool charges_match = true;
  int compared_outcomes = 0;
  bool pass = false;
};

/// Compares the closed-form update with direct simulation. B and C
/// measurements are handled by relabeling the measured qubit to slot A.
UpdateReport verify_update(const PureState3& state, const Measurement2& meas,
                           const Tolerances& tol = {});

/// alpha_A, beta_A in [0, 1].
struct TransferParams {
  double alpha_a = 1.0;
  double beta_a = 0.0;
};

/// Entanglement transfer under a deterministic measurement on A:
/// C_AB^2, C_AC^2, tau, J5 scale by alpha^2 and
/// C_BC^2 gains beta (1 - alpha^2) tau.
CParams transfer_rule(const CParams& c, const TransferParams& t);

/// Gram parameters of the biseparating measurement for canonical
/// coefficients. Throws DegenerateInput when l1^2 sin^2 phi + l0^2 is zero.
GramParams bisep_gram(const SchmidtCoeffs& coeffs, const Tolerances& tol = {});

/// The measurement on qubit A of state_from_schmidt(coeffs) whose outcomes
/// are both biseparable across BC with C_BC^2 = K_BC.
Measurement2 synth_bisep_measurement(const SchmidtCoeffs& coeffs,
                                     const Tolerances& tol = {});

/// Same measurement expressed in the computational basis of `state`.
Measurement2 synth_bisep_measurement(const PureState3& state,
                                     const Tolerances& tol = {});

struct Lemma2Bounds {
  double lhs = 0.0;  // C_BC
  double mid = 0.0;  // sum_i p_i C_BC^(i)
  double rhs = 0.0;  // sqrt(C_BC^2 + (1 - (sum p alpha)^2) tau)
  double sum_p_alpha = 0.0;
  /// (sum p C_BC^(i))^2 + (sum p sqrt(tau^(i)))^2 versus C_BC^2 + tau.
  double sum_after = 0.0;
  double sum_before = 0.0;
  bool holds = false;
};

/// Measurement must act on qubit A; both outcomes need p > tol.zero,
/// otherwise ZeroProbability is thrown.
Lemma2Bounds lemma2_bounds(const PureState3& state, const Measurement2& meas,
                           const Tolerances& tol = {},
                           double slack = 1e-9);

struct Lemma4Check {
  double lhs = 0.0;  // sum_i p_i sqrt(K_BC^(i))
  double rhs = 0.0;  // sqrt(K_BC)
  bool holds = false;
  bool saturated = false;
  /// For A measurements: whether the closed-form saturation condition
  /// holds in the canonical basis. Empty for B and C.
  std::optional<bool> saturation_predicted;
};

Lemma4Check lemma4_check(const PureState3& state, const Measurement2& meas,
                         const Tolerances& tol = {}, double slack = 1e-9);

struct SearchOptions {
  int grid = 8;  // points per axis of the (a, b, k, theta) grid
  int starts = 6;  // best grid cells refined locally
  int max_iterations = 4000;
  std::uint64_t seed = 0;
  double accept = 1e-6;
};

struct DeterministicMeasurement {
  Measurement2 measurement;  // in the state's computational basis
  GramParams gram;           // outcome 0, canonical basis
  double mismatch = 0.0;     // max invariant error over both outcomes
};

/// Bounded numerical search for a two-outcome measurement on A whose
/// outcomes are LU-equivalent with invariants `target`. nullopt means
/// nothing was found; it does not prove the target unreachable.
std::optional<DeterministicMeasurement> search_deterministic_measurement(
    const PureState3& state, const CParams& target,
    const SearchOptions& options = {}, const Tolerances& tol = {});

/// Aggregate result of a randomized check.
struct FuzzReport {
  double max_deviation = 0.0;
  int samples = 0;
  int violations = 0;
  bool pass = false;
};

FuzzReport fuzz_lemma1(int samples, std::uint64_t seed,
                       const Tolerances& tol = {}, double bound = 1e-9);
FuzzReport fuzz_lemma2(int samples, std::uint64_t seed,
                       const Tolerances& tol = {}, double slack = 1e-9);
FuzzReport fuzz_sum_p_alpha(int samples, std::uint64_t seed,
                            double slack = 1e-9);
FuzzReport fuzz_lemma4(int samples, std::uint64_t seed,
                       const Tolerances& tol = {}, double slack = 1e-9);

}  // namespace tqlocc

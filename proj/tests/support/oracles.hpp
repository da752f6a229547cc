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


// Reference implementations that do not go through the Schmidt form, plus
// generators of transformation pairs with a known verdict.

#pragma once

#include <cstdint>
#include <optional>

#include "tqlocc/invariants.hpp"
#include "tqlocc/random.hpp"
#include "tqlocc/state.hpp"

namespace tqlocc::testing {

/// Wootters concurrence of the reduced state on `pair`.
double wootters_concurrence(const PureState3& state, Pair pair);

/// 4 |Det| with Det the Cayley hyperdeterminant of the amplitude tensor.
double hyperdeterminant_tangle(const PureState3& state);

/// 4 det(rho_A), equal to C_AB^2 + C_AC^2 + tau.
double linear_entropy_a(const PureState3& state);

struct ZetaChoice {
  double zeta = 1.0;
  double zeta_a = 1.0;
  double zeta_b = 1.0;
  double zeta_c = 1.0;
};

/// Target state whose K-parameters are the diagonal image of the source
/// K-parameters under `z`, with charge `q`. Empty when the image has
/// no realizing state.
std::optional<PureState3> image_state(const InvariantReport& src,
                                      const ZetaChoice& z, Charge q);

/// A target reachable from `src` (a charge-definite source): random zeta
/// factors, zeta pinned to its forced value, charge preserved.
std::optional<PureState3> feasible_target(const InvariantReport& src,
                                          Rng& rng);

/// A target that violates exactly one condition: zeta pushed off its
/// forced value, or the charge flipped.
std::optional<PureState3> infeasible_target(const InvariantReport& src,
                                            Rng& rng);

/// Random local unitaries on every qubit.
PureState3 scramble(const PureState3& state, Rng& rng);

}  // namespace tqlocc::testing

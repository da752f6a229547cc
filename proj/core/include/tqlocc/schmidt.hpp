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
#include <vector>

#include "tqlocc/state.hpp"

namespace tqlocc {

/// Coefficients of the generalized Schmidt decomposition
///
///   l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
///
/// Positive decompositions have phi in [0, pi]; negative ones have phi in
/// (-pi, 0). If any coefficient vanishes, phi is zero.
struct SchmidtCoeffs {
  std::array<double, 5> lambda{1.0, 0.0, 0.0, 0.0, 0.0};
  double phi = 0.0;

  double l0() const { return lambda[0]; }
  double l1() const { return lambda[1]; }
  double l2() const { return lambda[2]; }
  double l3() const { return lambda[3]; }
  double l4() const { return lambda[4]; }
  bool is_positive() const { return phi >= 0.0; }
};

/// `u_a (x) u_b (x) u_c` maps the input state onto
/// state_from_schmidt(coeffs).
struct Decomposition {
  SchmidtCoeffs coeffs;
  Matrix2 u_a = Matrix2::Identity();
  Matrix2 u_b = Matrix2::Identity();
  Matrix2 u_c = Matrix2::Identity();
};

/// Positive decomposition. When both decompositions are positive
/// (sin phi = 0) the one with the larger l0 is returned.
/// Throws DecompositionFailed if no candidate reconstructs the state.
Decomposition schmidt_decompose(const PureState3& state,
                                const Tolerances& tol = {});

/// Every decomposition reachable from the singular-slice construction:
/// two for tangle > 0 (one positive, one negative unless sin phi = 0),
/// one otherwise. Each reconstructs the state within tol.recon.
std::vector<Decomposition> decomposition_candidates(const PureState3& state,
                                                    const Tolerances& tol = {});

PureState3 state_from_schmidt(const SchmidtCoeffs& coeffs);

/// Unnormalized amplitudes of the canonical form; no validation.
Amplitudes schmidt_amplitudes(const SchmidtCoeffs& coeffs);

}  // namespace tqlocc

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

namespace tqlocc {

/// Numerical thresholds. Classification (EP-definiteness, charge, state
/// kind) is discontinuous in these, so they are explicit everywhere.
struct Tolerances {
  /// Zero tests on coefficients, sin(phi), Delta_J, concurrences, tangle.
  double zero = 1e-9;
  /// Norm and measurement-completeness checks.
  double norm = 1e-9;
  /// Per-parameter comparison when deciding LU-equivalence.
  double eq = 1e-8;
  /// Decomposition round-trip error bound.
  double recon = 1e-8;
  /// Equality tests inside the feasibility conditions (zeta == zeta~,
  /// sign arguments, J5 row of the diagonal relation).
  double condition = 1e-8;
};

}  // namespace tqlocc

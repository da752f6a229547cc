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

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "tqlocc/state.hpp"

namespace tqlocc {

/// Seeded generator with platform-independent output. The standard
/// distributions are implementation-defined, so uniform and normal draws
/// are derived from the raw 64-bit stream here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  Complex complex_normal() {
    double re = normal();
    return {re, normal()};
  }
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

enum class StateClassTag {
  Haar,
  GhzType,
  WType,
  BiseparableAB,
  BiseparableAC,
  BiseparableBC,
  FullSeparable,
};

std::string_view to_string(StateClassTag tag);
std::optional<StateClassTag> state_class_from_string(std::string_view name);

/// Deterministic in (tag, seed). The result classifies into the requested
/// class at default tolerances and has random local unitaries applied, so
/// it is not in canonical form.
PureState3 random_state(StateClassTag tag, std::uint64_t seed);
PureState3 random_state(StateClassTag tag, Rng& rng);

/// Haar-distributed 2x2 unitary.
Matrix2 random_unitary(Rng& rng);

/// Random two-outcome measurement: M0 = W0 sqrt(G), M1 = W1 sqrt(I - G)
/// with G = V diag(e0, e1) V^dag, e_i uniform in [0, 1].
Measurement2 random_measurement(Qubit qubit, Rng& rng);

}  // namespace tqlocc

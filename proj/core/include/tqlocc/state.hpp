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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "tqlocc/tolerance.hpp"

namespace tqlocc {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

/// Amplitudes of |a b c> stored at index 4a + 2b + c.
using Amplitudes = std::array<Complex, 8>;

enum class Qubit { A = 0, B = 1, C = 2 };

std::string_view to_string(Qubit q);
std::optional<Qubit> qubit_from_string(std::string_view name);

constexpr std::size_t basis_index(int a, int b, int c) {
  return static_cast<std::size_t>(4 * a + 2 * b + c);
}

/// A normalized three-qubit pure state. Construction goes through
/// validate_state(), so every instance satisfies |norm - 1| <= tol.norm
/// before renormalization.
class PureState3 {
 public:
  /// |000>.
  PureState3();

  const Amplitudes& amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  Complex amplitude(int a, int b, int c) const {
    return amps_[basis_index(a, b, c)];
  }

  static PureState3 basis_state(int a, int b, int c);

 private:
  explicit PureState3(const Amplitudes& amps) : amps_(amps) {}
  Amplitudes amps_;

  friend PureState3 validate_state(std::span<const Complex>, const Tolerances&);
  friend PureState3 renormalized(const Amplitudes&, double);
};

/// Checks finiteness and normalization, then renormalizes exactly.
/// Throws NonFinite, NotNormalized, or Parse (wrong length).
PureState3 validate_state(std::span<const Complex> raw,
                          const Tolerances& tol = {});

/// Divides by sqrt(norm_squared). Used internally for post-measurement
/// states whose norm is known to be nonzero.
PureState3 renormalized(const Amplitudes& amps, double norm_squared);

double norm_squared(const Amplitudes& amps);

/// Max absolute componentwise difference.
double max_abs_diff(const Amplitudes& a, const Amplitudes& b);

/// A general 2x2 operator acting on one qubit.
struct LocalOperator {
  Qubit qubit = Qubit::A;
  Matrix2 matrix = Matrix2::Identity();
};

/// Applies `m` on qubit `q` of an unnormalized amplitude vector.
Amplitudes apply_local(const Amplitudes& amps, Qubit q, const Matrix2& m);

/// Applies u_a (x) u_b (x) u_c.
Amplitudes apply_product(const Amplitudes& amps, const Matrix2& u_a,
                         const Matrix2& u_b, const Matrix2& u_c);

struct AppliedOperator {
  Amplitudes amplitudes;  // M|psi>, unnormalized
  double probability = 0.0;  // <psi|M^dag M|psi>
};

AppliedOperator apply_operator(const PureState3& state,
                               const LocalOperator& op);

/// Entries of M^dag M = [[a, k e^{-i theta}], [k e^{i theta}, b]].
struct GramParams {
  double a = 1.0;
  double b = 1.0;
  double k = 0.0;
  double theta = 0.0;  // [0, 2 pi)
};

GramParams gram_params(const Matrix2& m);
Matrix2 gram_matrix(const GramParams& g);

/// Two-outcome local generalized measurement on one qubit.
class Measurement2 {
 public:
  /// Throws IncompleteMeasurement unless m0^dag m0 + m1^dag m1 = I.
  static Measurement2 create(Qubit qubit, const Matrix2& m0, const Matrix2& m1,
                             const Tolerances& tol = {});

  /// The measurement whose Gram matrices are g0 and I - g0, realized with
  /// positive square roots. Requires g0 and I - g0 positive semidefinite.
  static Measurement2 from_gram(Qubit qubit, const GramParams& g0,
                                const Tolerances& tol = {});

  Qubit qubit() const noexcept { return qubit_; }
  const Matrix2& op(std::size_t i) const { return ops_.at(i); }
  GramParams gram(std::size_t i) const { return gram_params(ops_.at(i)); }

  /// The same physical measurement with every operator right-multiplied by
  /// `u` (a change of basis on the measured qubit).
  Measurement2 composed_with(const Matrix2& u) const;

 private:
  Measurement2(Qubit q, const Matrix2& m0, const Matrix2& m1)
      : qubit_(q), ops_{m0, m1} {}
  Qubit qubit_;
  std::array<Matrix2, 2> ops_;
};

struct Outcome {
  double probability = 0.0;
  /// Flagged when probability < tol.zero; such outcomes have no state.
  bool degenerate = false;
  std::optional<PureState3> state;
};

std::array<Outcome, 2> measure(const PureState3& state,
                               const Measurement2& meas,
                               const Tolerances& tol = {});

/// perm[i] names the original qubit that moves into slot i. {B, A, C}
/// swaps A and B.
using Permutation = std::array<Qubit, 3>;

PureState3 permute_qubits(const PureState3& state, const Permutation& perm);
std::array<Permutation, 6> all_permutations();

PureState3 complex_conjugate(const PureState3& state);

}  // namespace tqlocc

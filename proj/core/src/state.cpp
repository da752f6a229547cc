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


#include "tqlocc/state.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "tqlocc/error.hpp"

namespace tqlocc {

namespace {

// Bit of the amplitude index that holds the given qubit.
constexpr int shift_of(Qubit q) { return 2 - static_cast<int>(q); }

bool all_finite(const Matrix2& m) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

Matrix2 psd_sqrt(const Matrix2& g) {
  Eigen::SelfAdjointEigenSolver<Matrix2> es(g);
  Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0);
  // Eigenvalues at rounding level are zero; their square roots would
  // otherwise leak a spurious rank into projective operators.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                       ev.maxCoeff();
  for (int i = 0; i < 2; ++i) ev(i) = ev(i) <= floor ? 0.0 : std::sqrt(ev(i));
  return es.eigenvectors() * ev.cast<Complex>().asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

std::string_view to_string(Qubit q) {
  switch (q) {
    case Qubit::A: return "A";
    case Qubit::B: return "B";
    case Qubit::C: return "C";
  }
  return "?";
}

std::optional<Qubit> qubit_from_string(std::string_view name) {
  if (name == "A" || name == "a") return Qubit::A;
  if (name == "B" || name == "b") return Qubit::B;
  if (name == "C" || name == "c") return Qubit::C;
  return std::nullopt;
}

PureState3::PureState3() { amps_.fill(Complex(0.0, 0.0)); amps_[0] = 1.0; }

PureState3 PureState3::basis_state(int a, int b, int c) {
  Amplitudes amps;
  amps.fill(Complex(0.0, 0.0));
  amps[basis_index(a, b, c)] = 1.0;
  return PureState3(amps);
}

double norm_squared(const Amplitudes& amps) {
  double s = 0.0;
  for (const auto& x : amps) s += std::norm(x);
  return s;
}

double max_abs_diff(const Amplitudes& a, const Amplitudes& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

PureState3 validate_state(std::span<const Complex> raw, const Tolerances& tol) {
  if (raw.size() != 8)
    throw Error(ErrorCode::Parse, "expected 8 amplitudes, got " +
                                      std::to_string(raw.size()));
  Amplitudes amps;
  for (std::size_t i = 0; i < 8; ++i) {
    if (!std::isfinite(raw[i].real()) || !std::isfinite(raw[i].imag()))
      throw Error(ErrorCode::NonFinite,
                  "amplitude " + std::to_string(i) + " is not finite");
    amps[i] = raw[i];
  }
  double n2 = norm_squared(amps);
  if (std::abs(std::sqrt(n2) - 1.0) > tol.norm)
    throw Error(ErrorCode::NotNormalized,
                "norm " + std::to_string(std::sqrt(n2)) + " differs from 1");
  // Already unit up to rounding: keep the input bits so that serialized
  // states read back unchanged.
  if (std::abs(n2 - 1.0) <= 8.0 * std::numeric_limits<double>::epsilon())
    return PureState3(amps);
  double inv = 1.0 / std::sqrt(n2);
  for (auto& x : amps) x *= inv;
  return PureState3(amps);
}

PureState3 renormalized(const Amplitudes& amps, double norm_sq) {
  Amplitudes out = amps;
  double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& x : out) x *= inv;
  return PureState3(out);
}

Amplitudes apply_local(const Amplitudes& amps, Qubit q, const Matrix2& m) {
  const int bit = 1 << shift_of(q);
  Amplitudes out;
  for (std::size_t i = 0; i < 8; ++i) {
    if (i & bit) continue;
    Complex x0 = amps[i], x1 = amps[i | bit];
    out[i] = m(0, 0) * x0 + m(0, 1) * x1;
    out[i | bit] = m(1, 0) * x0 + m(1, 1) * x1;
  }
  return out;
}

Amplitudes apply_product(const Amplitudes& amps, const Matrix2& u_a,
                         const Matrix2& u_b, const Matrix2& u_c) {
  return apply_local(apply_local(apply_local(amps, Qubit::A, u_a), Qubit::B,
                                 u_b),
                     Qubit::C, u_c);
}

AppliedOperator apply_operator(const PureState3& state,
                               const LocalOperator& op) {
  AppliedOperator r;
  r.amplitudes = apply_local(state.amplitudes(), op.qubit, op.matrix);
  r.probability = norm_squared(r.amplitudes);
  return r;
}

GramParams gram_params(const Matrix2& m) {
  Matrix2 g = m.adjoint() * m;
  GramParams p;
  p.a = g(0, 0).real();
  p.b = g(1, 1).real();
  p.k = std::abs(g(1, 0));
  double th = p.k > 0.0 ? std::arg(g(1, 0)) : 0.0;
  if (th < 0.0) th += 2.0 * M_PI;
  p.theta = th;
  return p;
}

Matrix2 gram_matrix(const GramParams& g) {
  Matrix2 m;
  Complex e = std::polar(g.k, g.theta);
  m << g.a, std::conj(e), e, g.b;
  return m;
}

Measurement2 Measurement2::create(Qubit qubit, const Matrix2& m0,
                                  const Matrix2& m1, const Tolerances& tol) {
  if (!all_finite(m0) || !all_finite(m1))
    throw Error(ErrorCode::NonFinite, "measurement operator is not finite");
  Matrix2 sum = m0.adjoint() * m0 + m1.adjoint() * m1 - Matrix2::Identity();
  double err = sum.cwiseAbs().maxCoeff();
  if (err > tol.norm)
    throw Error(ErrorCode::IncompleteMeasurement,
                "sum of M^dag M deviates from identity by " +
                    std::to_string(err));
  return Measurement2(qubit, m0, m1);
}

Measurement2 Measurement2::from_gram(Qubit qubit, const GramParams& g0,
                                     const Tolerances& tol) {
  Matrix2 g = gram_matrix(g0);
  Matrix2 h = Matrix2::Identity() - g;
  for (const Matrix2* x : {&g, &h}) {
    Eigen::SelfAdjointEigenSolver<Matrix2> es(*x);
    if (es.eigenvalues().minCoeff() < -tol.zero)
      throw Error(ErrorCode::IncompleteMeasurement,
                  "Gram parameters do not define a two-outcome measurement");
  }
  return Measurement2(qubit, psd_sqrt(g), psd_sqrt(h));
}

Measurement2 Measurement2::composed_with(const Matrix2& u) const {
  return Measurement2(qubit_, ops_[0] * u, ops_[1] * u);
}

std::array<Outcome, 2> measure(const PureState3& state,
                               const Measurement2& meas,
                               const Tolerances& tol) {
  std::array<Outcome, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    auto r = apply_operator(state, {meas.qubit(), meas.op(i)});
    out[i].probability = r.probability;
    out[i].degenerate = r.probability < tol.zero;
    if (!out[i].degenerate)
      out[i].state = renormalized(r.amplitudes, r.probability);
  }
  return out;
}

PureState3 permute_qubits(const PureState3& state, const Permutation& perm) {
  Amplitudes out;
  for (std::size_t i = 0; i < 8; ++i) {
    std::size_t src = 0;
    for (int slot = 0; slot < 3; ++slot) {
      int bit = (static_cast<int>(i) >> (2 - slot)) & 1;
      src |= static_cast<std::size_t>(bit) << shift_of(perm[slot]);
    }
    out[i] = state[src];
  }
  return renormalized(out, 1.0);
}

std::array<Permutation, 6> all_permutations() {
  using Q = Qubit;
  return {{{Q::A, Q::B, Q::C},
           {Q::A, Q::C, Q::B},
           {Q::B, Q::A, Q::C},
           {Q::B, Q::C, Q::A},
           {Q::C, Q::A, Q::B},
           {Q::C, Q::B, Q::A}}};
}

PureState3 complex_conjugate(const PureState3& state) {
  Amplitudes out = state.amplitudes();
  for (auto& x : out) x = std::conj(x);
  return renormalized(out, 1.0);
}

}  // namespace tqlocc

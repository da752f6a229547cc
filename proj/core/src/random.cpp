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


#include "tqlocc/random.hpp"

#include <cmath>

namespace tqlocc {

namespace {

Amplitudes zeros() {
  Amplitudes a;
  a.fill(Complex(0.0, 0.0));
  return a;
}

PureState3 locally_rotated(const Amplitudes& amps, Rng& rng) {
  Matrix2 ua = random_unitary(rng);
  Matrix2 ub = random_unitary(rng);
  Matrix2 uc = random_unitary(rng);
  Amplitudes out = apply_product(amps, ua, ub, uc);
  return renormalized(out, norm_squared(out));
}

Amplitudes sample_ghz_type(Rng& rng) {
  constexpr double kMinTau = 1e-3;
  for (;;) {
    std::array<double, 5> l;
    double n2 = 0.0;
    for (auto& x : l) {
      x = std::abs(rng.normal());
      n2 += x * x;
    }
    for (auto& x : l) x /= std::sqrt(n2);
    double phi = rng.uniform(0.0, M_PI);
    if (4.0 * l[0] * l[0] * l[4] * l[4] < kMinTau) continue;
    Amplitudes a = zeros();
    a[0] = l[0];
    a[4] = std::polar(l[1], phi);
    a[5] = l[2];
    a[6] = l[3];
    a[7] = l[4];
    return a;
  }
}

Amplitudes sample_w_type(Rng& rng) {
  constexpr double kMinC = 1e-3;
  for (;;) {
    std::array<double, 4> x;
    double n2 = 0.0;
    for (auto& v : x) {
      v = std::abs(rng.normal());
      n2 += v * v;
    }
    for (auto& v : x) v /= std::sqrt(n2);
    if (2 * x[1] * x[2] < kMinC || 2 * x[1] * x[3] < kMinC ||
        2 * x[2] * x[3] < kMinC)
      continue;
    Amplitudes a = zeros();
    a[basis_index(0, 0, 0)] = x[0];
    a[basis_index(1, 0, 0)] = x[1];
    a[basis_index(0, 1, 0)] = x[2];
    a[basis_index(0, 0, 1)] = x[3];
    return a;
  }
}

Amplitudes sample_biseparable(Qubit p, Qubit q, Rng& rng) {
  double t = 0.0;
  do {
    t = rng.uniform(0.0, M_PI / 4.0);
  } while (std::sin(2.0 * t) < 1e-3);
  Amplitudes a = zeros();
  a[0] = std::cos(t);
  std::size_t idx = (std::size_t{1} << (2 - static_cast<int>(p))) |
                    (std::size_t{1} << (2 - static_cast<int>(q)));
  a[idx] = std::sin(t);
  return a;
}

}  // namespace

double Rng::normal() {
  if (spare_) {
    double v = *spare_;
    spare_.reset();
    return v;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * M_PI * u2);
  return r * std::cos(2.0 * M_PI * u2);
}

std::string_view to_string(StateClassTag tag) {
  switch (tag) {
    case StateClassTag::Haar: return "haar";
    case StateClassTag::GhzType: return "ghz_type";
    case StateClassTag::WType: return "w_type";
    case StateClassTag::BiseparableAB: return "biseparable_ab";
    case StateClassTag::BiseparableAC: return "biseparable_ac";
    case StateClassTag::BiseparableBC: return "biseparable_bc";
    case StateClassTag::FullSeparable: return "full_separable";
  }
  return "?";
}

std::optional<StateClassTag> state_class_from_string(std::string_view name) {
  for (auto t : {StateClassTag::Haar, StateClassTag::GhzType,
                 StateClassTag::WType, StateClassTag::BiseparableAB,
                 StateClassTag::BiseparableAC, StateClassTag::BiseparableBC,
                 StateClassTag::FullSeparable}) {
    if (name == to_string(t)) return t;
  }
  if (name == "biseparable") return StateClassTag::BiseparableBC;
  return std::nullopt;
}

Matrix2 random_unitary(Rng& rng) {
  Complex a = rng.complex_normal();
  Complex b = rng.complex_normal();
  double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  Complex ph = std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI));
  Matrix2 u;
  u << ph * a, -ph * std::conj(b), ph * b, ph * std::conj(a);
  return u;
}

PureState3 random_state(StateClassTag tag, std::uint64_t seed) {
  Rng rng(seed);
  return random_state(tag, rng);
}

PureState3 random_state(StateClassTag tag, Rng& rng) {
  switch (tag) {
    case StateClassTag::Haar: {
      Amplitudes a;
      for (auto& x : a) x = rng.complex_normal();
      return renormalized(a, norm_squared(a));
    }
    case StateClassTag::GhzType:
      return locally_rotated(sample_ghz_type(rng), rng);
    case StateClassTag::WType:
      return locally_rotated(sample_w_type(rng), rng);
    case StateClassTag::BiseparableAB:
      return locally_rotated(sample_biseparable(Qubit::A, Qubit::B, rng), rng);
    case StateClassTag::BiseparableAC:
      return locally_rotated(sample_biseparable(Qubit::A, Qubit::C, rng), rng);
    case StateClassTag::BiseparableBC:
      return locally_rotated(sample_biseparable(Qubit::B, Qubit::C, rng), rng);
    case StateClassTag::FullSeparable:
      return locally_rotated(PureState3().amplitudes(), rng);
  }
  return PureState3();
}

Measurement2 random_measurement(Qubit qubit, Rng& rng) {
  Matrix2 a0, a1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a0(i, j) = rng.complex_normal();
      a1(i, j) = rng.complex_normal();
    }
  Matrix2 s = a0.adjoint() * a0 + a1.adjoint() * a1;
  Eigen::SelfAdjointEigenSolver<Matrix2> es(s);
  Eigen::Vector2d inv = es.eigenvalues().cwiseSqrt().cwiseInverse();
  Matrix2 s_inv_half = es.eigenvectors() * inv.cast<Complex>().asDiagonal() *
                       es.eigenvectors().adjoint();
  return Measurement2::create(qubit, a0 * s_inv_half, a1 * s_inv_half);
}

}  // namespace tqlocc

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


#include "tqlocc/schmidt.hpp"

#include <algorithm>
#include <cmath>

#include "tqlocc/error.hpp"

namespace tqlocc {

namespace {

using Vec2 = Eigen::Vector2cd;

// Slice T_a with rows indexed by b and columns by c.
Matrix2 slice(const Amplitudes& amps, int a) {
  Matrix2 t;
  t << amps[basis_index(a, 0, 0)], amps[basis_index(a, 0, 1)],
      amps[basis_index(a, 1, 0)], amps[basis_index(a, 1, 1)];
  return t;
}

double wrap_pi(double x) {
  x = std::remainder(x, 2.0 * M_PI);
  return x;
}

// Unit directions (s, t) for which s T0 + t T1 is singular. When the
// vertex of a near double root is offered it comes last.
std::vector<Vec2> singular_directions(const Matrix2& t0, const Matrix2& t1,
                                      bool& vertex) {
  vertex = false;
  const Complex qa = t0.determinant();
  const Complex qc = t1.determinant();
  const Complex qb = t0(0, 0) * t1(1, 1) + t0(1, 1) * t1(0, 0) -
                     t0(0, 1) * t1(1, 0) - t0(1, 0) * t1(0, 1);
  const double scale = std::max({std::abs(qa), std::abs(qb), std::abs(qc)});
  const double ref = t0.squaredNorm() + t1.squaredNorm();
  std::vector<Vec2> dirs;

  if (scale <= 1e-14 * std::max(ref, 1e-300)) {
    // Every combination is singular; take the one of largest norm.
    Eigen::Matrix<Complex, 2, 4> m;
    m.row(0) = Eigen::Map<const Eigen::Matrix<Complex, 1, 4>>(t0.data());
    m.row(1) = Eigen::Map<const Eigen::Matrix<Complex, 1, 4>>(t1.data());
    Matrix2 g = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Matrix2> es(g);
    Vec2 e = es.eigenvectors().col(1);
    dirs.push_back(e.conjugate());
    return dirs;
  }

  auto push = [&](Complex s, Complex t) {
    Vec2 v(s, t);
    dirs.push_back(v / v.norm());
  };

  // Solve with the better-conditioned leading coefficient.
  const bool in_t = std::abs(qc) >= std::abs(qa);
  const Complex lead = in_t ? qc : qa;
  const Complex tail = in_t ? qa : qc;
  if (std::abs(lead) == 0.0) {
    push(1.0, 0.0);
    push(0.0, 1.0);
    return dirs;
  }
  const Complex disc = qb * qb - 4.0 * lead * tail;
  std::vector<Complex> roots;
  Complex sq = std::sqrt(disc);
  if (std::real(std::conj(qb) * sq) < 0.0) sq = -sq;
  Complex q = -0.5 * (qb + sq);
  roots.push_back(q / lead);
  if (std::abs(q) > 0.0) roots.push_back(tail / q);
  // Near a double root the split roots carry the square root of the
  // rounding error, so the vertex is offered as well; reconstruction
  // decides between them.
  const double disc_ref = ref * std::max(std::abs(lead), std::abs(qb));
  if (std::abs(disc) <= 1e-13 * disc_ref) {
    roots.push_back(-qb / (2.0 * lead));
    vertex = true;
  }
  for (Complex x : roots) {
    if (in_t)
      push(1.0, x);
    else
      push(x, 1.0);
  }
  return dirs;
}

struct PhaseFix {
  double phi = 0.0;
  double alpha0 = 0.0, alpha1 = 0.0, beta1 = 0.0, gamma1 = 0.0;
};

PhaseFix fix_phases(const std::array<Complex, 5>& x, double tol_zero) {
  std::array<double, 5> arg{};
  std::array<bool, 5> small{};
  bool any_small = false;
  for (int i = 0; i < 5; ++i) {
    small[i] = std::abs(x[i]) < tol_zero;
    arg[i] = small[i] ? 0.0 : std::arg(x[i]);
    any_small = any_small || small[i];
  }
  PhaseFix f;
  f.alpha0 = -arg[0];
  if (!any_small) {
    f.phi = wrap_pi(arg[1] + arg[4] - arg[2] - arg[3]);
    f.alpha1 = f.phi - arg[1];
    f.gamma1 = -arg[2] - f.alpha1;
    f.beta1 = -arg[3] - f.alpha1;
    return f;
  }
  f.phi = 0.0;
  if (small[1]) {
    f.alpha1 = arg[4] - arg[2] - arg[3];
    f.gamma1 = -arg[2] - f.alpha1;
    f.beta1 = -arg[3] - f.alpha1;
  } else if (small[2]) {
    f.alpha1 = -arg[1];
    f.beta1 = -arg[3] - f.alpha1;
    f.gamma1 = -arg[4] - f.alpha1 - f.beta1;
  } else if (small[3]) {
    f.alpha1 = -arg[1];
    f.gamma1 = -arg[2] - f.alpha1;
    f.beta1 = -arg[4] - f.alpha1 - f.gamma1;
  } else {
    f.alpha1 = -arg[1];
    f.gamma1 = -arg[2] - f.alpha1;
    f.beta1 = -arg[3] - f.alpha1;
  }
  return f;
}

std::optional<Decomposition> decompose_in_basis(const Amplitudes& amps,
                                                const Matrix2& ua,
                                                const Matrix2& p0,
                                                const Matrix2& p1,
                                                const Eigen::JacobiSVD<Matrix2>& basis,
                                                const Tolerances& tol) {
  Matrix2 ub = basis.matrixU().adjoint();
  Matrix2 uc = basis.matrixV().transpose();
  Matrix2 q0 = ub * p0 * uc.transpose();
  Matrix2 q1 = ub * p1 * uc.transpose();

  std::array<Complex, 5> x{q0(0, 0), q1(0, 0), q1(0, 1), q1(1, 0), q1(1, 1)};
  PhaseFix f = fix_phases(x, tol.zero);

  Decomposition d;
  for (int i = 0; i < 5; ++i) d.coeffs.lambda[i] = std::abs(x[i]);
  double phi = f.phi;
  constexpr double kClamp = 1e-9;
  if (std::abs(phi) <= kClamp) phi = 0.0;
  if (M_PI - std::abs(phi) <= kClamp) phi = M_PI;
  d.coeffs.phi = phi;

  Matrix2 da = Matrix2::Zero(), db = Matrix2::Identity(),
          dc = Matrix2::Identity();
  da(0, 0) = std::polar(1.0, f.alpha0);
  da(1, 1) = std::polar(1.0, f.alpha1);
  db(1, 1) = std::polar(1.0, f.beta1);
  dc(1, 1) = std::polar(1.0, f.gamma1);
  d.u_a = da * ua;
  d.u_b = db * ub;
  d.u_c = dc * uc;

  Amplitudes mapped = apply_product(amps, d.u_a, d.u_b, d.u_c);
  if (max_abs_diff(mapped, schmidt_amplitudes(d.coeffs)) > tol.recon)
    return std::nullopt;
  return d;
}

void decompose_along(const PureState3& state, const Vec2& dir,
                     const Tolerances& tol, std::vector<Decomposition>& out) {
  const Amplitudes& amps = state.amplitudes();
  const Matrix2 t0 = slice(amps, 0);
  const Matrix2 t1 = slice(amps, 1);
  const Complex s = dir(0), t = dir(1);

  Matrix2 ua;
  ua << s, t, -std::conj(t), std::conj(s);
  Matrix2 p0 = s * t0 + t * t1;
  Matrix2 p1 = -std::conj(t) * t0 + std::conj(s) * t1;

  Eigen::JacobiSVD<Matrix2> svd0(p0, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double sigma = svd0.singularValues()(0);
  if (sigma >= tol.zero) {
    if (auto d = decompose_in_basis(amps, ua, p0, p1, svd0, tol))
      out.push_back(*d);
  }
  // A nearly vanishing p0 (states within rounding of A times BC) gives a
  // noise-driven basis; the basis of p1 is then the meaningful one.
  if (sigma < tol.recon) {
    Eigen::JacobiSVD<Matrix2> svd1(p1,
                                   Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (auto d = decompose_in_basis(amps, ua, p0, p1, svd1, tol))
      out.push_back(*d);
  }
}

}  // namespace

Amplitudes schmidt_amplitudes(const SchmidtCoeffs& c) {
  Amplitudes a;
  a.fill(Complex(0.0, 0.0));
  a[0] = c.l0();
  a[4] = std::polar(c.l1(), c.phi);
  a[5] = c.l2();
  a[6] = c.l3();
  a[7] = c.l4();
  return a;
}

PureState3 state_from_schmidt(const SchmidtCoeffs& coeffs) {
  Amplitudes a = schmidt_amplitudes(coeffs);
  return renormalized(a, norm_squared(a));
}

namespace {

std::vector<Decomposition> candidates(const PureState3& state,
                                      const Tolerances& tol,
                                      std::size_t& vertex_begin) {
  const Amplitudes& amps = state.amplitudes();
  std::vector<Decomposition> out;
  bool vertex = false;
  const auto dirs = singular_directions(slice(amps, 0), slice(amps, 1), vertex);
  vertex_begin = dirs.size() + 1;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (vertex && i + 1 == dirs.size()) vertex_begin = out.size();
    decompose_along(state, dirs[i], tol, out);
  }
  if (vertex_begin > out.size()) vertex_begin = out.size();
  return out;
}

}  // namespace

std::vector<Decomposition> decomposition_candidates(const PureState3& state,
                                                    const Tolerances& tol) {
  std::size_t vertex_begin = 0;
  return candidates(state, tol, vertex_begin);
}

Decomposition schmidt_decompose(const PureState3& state,
                                const Tolerances& tol) {
  std::size_t vertex_begin = 0;
  const auto cands = candidates(state, tol, vertex_begin);
  const Decomposition* best = nullptr;
  // A reconstructing vertex is exact where the split roots only carry the
  // square root of the rounding error.
  for (std::size_t i = vertex_begin; i < cands.size(); ++i) {
    const auto& d = cands[i];
    if (!d.coeffs.is_positive()) continue;
    if (!best || d.coeffs.l0() > best->coeffs.l0()) best = &d;
  }
  if (!best) {
    for (const auto& d : cands) {
      if (!d.coeffs.is_positive()) continue;
      if (!best || d.coeffs.l0() > best->coeffs.l0()) best = &d;
    }
  }
  if (!best)
    throw Error(ErrorCode::DecompositionFailed,
                "no positive decomposition reproduced the state");
  return *best;
}

}  // namespace tqlocc

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


#include <gsl/gsl_errno.h>
#include <gsl/gsl_multifit_nlinear.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "tqlocc/error.hpp"
#include "tqlocc/random.hpp"
#include "tqlocc/transfer.hpp"

namespace tqlocc {

namespace {

constexpr double kPenalty = 1e3;

struct Problem {
  SchmidtCoeffs coeffs;
  CParams target;
  Tolerances tol;
};

// Unconstrained coordinates -> Gram parameters of outcome 0. The two
// outcome Grams stay positive semidefinite for every input.
GramParams decode(const double* u) {
  GramParams g;
  g.a = 0.5 * (1.0 - std::cos(u[0]));
  g.b = 0.5 * (1.0 - std::cos(u[1]));
  const double f = 0.5 * (1.0 - std::cos(u[2]));
  g.k = f * std::min(std::sqrt(g.a * g.b),
                     std::sqrt((1.0 - g.a) * (1.0 - g.b)));
  g.theta = std::fmod(std::fmod(u[3], 2.0 * M_PI) + 2.0 * M_PI, 2.0 * M_PI);
  return g;
}

// Per-outcome deviations from the target; a vanishing outcome contributes
// nothing since it never occurs.
struct Mismatch {
  double max_abs = 0.0;
  double sum_sq = 0.0;
};

Mismatch mismatch(const Problem& pb, const GramParams& g) {
  Mismatch m;
  GramParams grams[2] = {g, g};
  grams[1].a = 1.0 - g.a;
  grams[1].b = 1.0 - g.b;
  grams[1].theta = std::fmod(g.theta + M_PI, 2.0 * M_PI);
  const auto want = pb.target.as_array();
  int live = 0;
  for (const auto& gi : grams) {
    OutcomePrediction o;
    try {
      o = predict_outcome(pb.coeffs, gi, pb.tol);
    } catch (const Error&) {
      continue;
    }
    ++live;
    const auto got = o.c.as_array();
    for (std::size_t j = 0; j < 5; ++j) {
      const double e = got[j] - want[j];
      m.max_abs = std::max(m.max_abs, std::abs(e));
      m.sum_sq += o.p * e * e;
    }
  }
  if (live == 0) {
    m.max_abs = kPenalty;
    m.sum_sq = kPenalty;
  }
  return m;
}

double objective_value(const Problem& pb, const double* u) {
  return mismatch(pb, decode(u)).sum_sq;
}

double objective(const gsl_vector* x, void* params) {
  double u[4];
  for (int i = 0; i < 4; ++i) u[i] = gsl_vector_get(x, i);
  return objective_value(*static_cast<const Problem*>(params), u);
}

struct Start {
  double u[4];
  double value;
};

void refine(const Problem& pb, Start& s, int max_iterations) {
  using Minimizer = std::unique_ptr<gsl_multimin_fminimizer,
                                    decltype(&gsl_multimin_fminimizer_free)>;
  using Vector = std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)>;
  Minimizer mz(gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 4),
               &gsl_multimin_fminimizer_free);
  Vector x(gsl_vector_alloc(4), &gsl_vector_free);
  Vector step(gsl_vector_alloc(4), &gsl_vector_free);
  for (int i = 0; i < 4; ++i) {
    gsl_vector_set(x.get(), i, s.u[i]);
    gsl_vector_set(step.get(), i, 0.2);
  }
  gsl_multimin_function fn{&objective, 4, const_cast<Problem*>(&pb)};
  gsl_multimin_fminimizer_set(mz.get(), &fn, x.get(), step.get());
  for (int it = 0; it < max_iterations; ++it) {
    if (gsl_multimin_fminimizer_iterate(mz.get()) != GSL_SUCCESS) break;
    const double size = gsl_multimin_fminimizer_size(mz.get());
    if (gsl_multimin_test_size(size, 1e-13) == GSL_SUCCESS) break;
  }
  const gsl_vector* best = gsl_multimin_fminimizer_x(mz.get());
  for (int i = 0; i < 4; ++i) s.u[i] = gsl_vector_get(best, i);
  s.value = gsl_multimin_fminimizer_minimum(mz.get());
}

constexpr std::size_t kResiduals = 10;

int residuals(const gsl_vector* x, void* params, gsl_vector* f) {
  const Problem& pb = *static_cast<const Problem*>(params);
  double u[4];
  for (int i = 0; i < 4; ++i) u[i] = gsl_vector_get(x, i);
  const GramParams g = decode(u);
  GramParams grams[2] = {g, g};
  grams[1].a = 1.0 - g.a;
  grams[1].b = 1.0 - g.b;
  grams[1].theta = std::fmod(g.theta + M_PI, 2.0 * M_PI);
  const auto want = pb.target.as_array();
  int live = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    std::array<double, 5> got = want;
    try {
      got = predict_outcome(pb.coeffs, grams[i], pb.tol).c.as_array();
      ++live;
    } catch (const Error&) {
    }
    for (std::size_t j = 0; j < 5; ++j)
      gsl_vector_set(f, 5 * i + j, got[j] - want[j]);
  }
  if (live == 0)
    for (std::size_t j = 0; j < kResiduals; ++j) gsl_vector_set(f, j, kPenalty);
  return GSL_SUCCESS;
}

// Levenberg-Marquardt on the residual vector; converges in the narrow
// valleys where the simplex stalls.
void polish(const Problem& pb, Start& s, int max_iterations) {
  gsl_error_handler_t* old = gsl_set_error_handler_off();
  gsl_multifit_nlinear_parameters params = gsl_multifit_nlinear_default_parameters();
  std::unique_ptr<gsl_multifit_nlinear_workspace,
                  decltype(&gsl_multifit_nlinear_free)>
      w(gsl_multifit_nlinear_alloc(gsl_multifit_nlinear_trust, &params,
                                   kResiduals, 4),
        &gsl_multifit_nlinear_free);
  gsl_multifit_nlinear_fdf fdf{};
  fdf.f = &residuals;
  fdf.df = nullptr;
  fdf.fvv = nullptr;
  fdf.n = kResiduals;
  fdf.p = 4;
  fdf.params = const_cast<Problem*>(&pb);
  gsl_vector_view x = gsl_vector_view_array(s.u, 4);
  if (gsl_multifit_nlinear_init(&x.vector, &fdf, w.get()) == GSL_SUCCESS) {
    int info = 0;
    gsl_multifit_nlinear_driver(max_iterations, 1e-15, 1e-15, 1e-15, nullptr,
                                nullptr, &info, w.get());
    const gsl_vector* best = gsl_multifit_nlinear_position(w.get());
    double u[4];
    for (int i = 0; i < 4; ++i) u[i] = gsl_vector_get(best, i);
    const double v = objective_value(pb, u);
    if (std::isfinite(v) && v < s.value) {
      std::copy(u, u + 4, s.u);
      s.value = v;
    }
  }
  gsl_set_error_handler(old);
}

// Gram parameters (a, b, k, theta) -> unconstrained coordinates of decode.
bool encode(const GramParams& g, double* u) {
  const double cap = std::min(std::sqrt(g.a * g.b),
                              std::sqrt((1.0 - g.a) * (1.0 - g.b)));
  if (!(g.a >= 0.0 && g.a <= 1.0 && g.b >= 0.0 && g.b <= 1.0) || cap <= 0.0)
    return false;
  const double f = std::clamp(g.k / cap, 0.0, 1.0);
  u[0] = std::acos(1.0 - 2.0 * g.a);
  u[1] = std::acos(1.0 - 2.0 * g.b);
  u[2] = std::acos(1.0 - 2.0 * f);
  u[3] = g.theta;
  return true;
}

// Targets of the transfer form scale C_AB, C_AC and sqrt(tau) by one
// factor alpha. For those the two-outcome equations reduce to a search
// over (b, theta): k follows from the C_BC budget, a from the first
// outcome's probability, leaving the two alpha equations as residuals.
struct Reduced {
  double alpha = 0.0;
  double c_bc = 0.0;
};

std::optional<Reduced> reduced_target(const CParams& src, const CParams& t) {
  double alpha = 0.0;
  if (src.tau > 0.0) alpha = std::sqrt(t.tau / src.tau);
  else if (src.c_ab > 0.0) alpha = t.c_ab / src.c_ab;
  else if (src.c_ac > 0.0) alpha = t.c_ac / src.c_ac;
  else return std::nullopt;
  if (!(alpha > 0.0 && alpha < 1.0) || t.c_bc < src.c_bc) return std::nullopt;
  return Reduced{alpha, t.c_bc};
}

struct ReducedPoint {
  GramParams g;
  double residual = 0.0;
};

std::optional<ReducedPoint> reduced_point(const SchmidtCoeffs& s,
                                          const Reduced& r, double b,
                                          double theta) {
  const double l0 = s.l0(), l1 = s.l1();
  if (l0 <= 0.0) return std::nullopt;
  const double sqrt_tau = std::sqrt(c_params(s).tau);
  const Complex w = s.l2() * s.l3() - s.l1() * s.l4() * std::polar(1.0, s.phi);
  const Complex e = std::polar(1.0, theta);
  auto budget = [&](double k) {
    return std::abs(sqrt_tau * k * e - 2.0 * b * w) +
           std::abs(sqrt_tau * k * e + 2.0 * (1.0 - b) * w);
  };
  double lo = 0.0, hi = 0.5;
  if (budget(hi) < r.c_bc) return std::nullopt;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (budget(mid) < r.c_bc ? lo : hi) = mid;
  }
  const double k = 0.5 * (lo + hi);
  const double p0 = std::abs(sqrt_tau * k * e - 2.0 * b * w) / r.c_bc;
  const double a =
      (p0 - (1.0 - l0 * l0) * b - 2.0 * l0 * l1 * k * std::cos(theta - s.phi)) /
      (l0 * l0);
  if (!(a >= 0.0 && a <= 1.0)) return std::nullopt;
  const double det0 = a * b - k * k, det1 = (1.0 - a) * (1.0 - b) - k * k;
  if (det0 < 0.0 || det1 < 0.0) return std::nullopt;
  ReducedPoint pt;
  pt.g = GramParams{a, b, k, theta};
  pt.residual = std::hypot(std::sqrt(det0) - r.alpha * p0,
                           std::sqrt(det1) - r.alpha * (1.0 - p0));
  return pt;
}

std::vector<Start> reduced_starts(const Problem& pb, int count) {
  std::vector<Start> out;
  const auto r = reduced_target(c_params(pb.coeffs), pb.target);
  if (!r) return out;
  constexpr int kB = 96, kT = 96;
  std::vector<ReducedPoint> pts;
  for (int i = 0; i < kB; ++i) {
    const double v = -16.0 + 32.0 * (i + 0.5) / kB;
    const double b = 1.0 / (1.0 + std::exp(-v));
    for (int j = 0; j < kT; ++j) {
      const double theta = 2.0 * M_PI * j / kT;
      if (auto pt = reduced_point(pb.coeffs, *r, b, theta)) pts.push_back(*pt);
    }
  }
  const std::size_t keep = std::min(pts.size(), static_cast<std::size_t>(count));
  std::partial_sort(pts.begin(), pts.begin() + keep, pts.end(),
                    [](const ReducedPoint& x, const ReducedPoint& y) {
                      return x.residual < y.residual;
                    });
  for (std::size_t i = 0; i < keep; ++i) {
    Start st;
    if (!encode(pts[i].g, st.u)) continue;
    st.value = objective_value(pb, st.u);
    out.push_back(st);
  }
  return out;
}

bool close_to(const CParams& a, const CParams& b, double eps) {
  const auto x = a.as_array(), y = b.as_array();
  for (std::size_t i = 0; i < 5; ++i)
    if (std::abs(x[i] - y[i]) > eps) return false;
  return true;
}

// Simulates the measurement and checks both outcomes against the target.
bool realizes(const PureState3& state, const Measurement2& m,
              const CParams& target, double eps, const Tolerances& tol) {
  const auto outcomes = measure(state, m, tol);
  std::optional<InvariantReport> first;
  for (const auto& o : outcomes) {
    if (o.degenerate) continue;
    const InvariantReport r = analyze(*o.state, tol);
    if (!close_to(r.c, target, eps)) return false;
    if (first) {
      if (first->charge != r.charge || !close_to(first->c, r.c, eps))
        return false;
    } else {
      first = r;
    }
  }
  return first.has_value();
}

}  // namespace

std::optional<DeterministicMeasurement> search_deterministic_measurement(
    const PureState3& state, const CParams& target,
    const SearchOptions& options, const Tolerances& tol) {
  const Decomposition d = schmidt_decompose(state, tol);
  Problem pb{d.coeffs, target, tol};

  auto accept = [&](const GramParams& g) -> std::optional<DeterministicMeasurement> {
    Measurement2 local = Measurement2::from_gram(Qubit::A, g, tol);
    Measurement2 m = local.composed_with(d.u_a);
    if (!realizes(state, m, target, options.accept, tol)) return std::nullopt;
    return DeterministicMeasurement{m, g, mismatch(pb, g).max_abs};
  };

  if (close_to(c_params(d.coeffs), target, options.accept)) {
    GramParams half;
    half.a = half.b = 0.5;
    half.k = 0.0;
    half.theta = 0.0;
    if (auto r = accept(half)) return r;
  }

  const int n = std::max(2, options.grid);
  std::vector<Start> cells;
  cells.reserve(static_cast<std::size_t>(n) * n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int t = 0; t < n; ++t) {
          Start s;
          s.u[0] = M_PI * (i + 0.5) / n;
          s.u[1] = M_PI * (j + 0.5) / n;
          s.u[2] = M_PI * (l + 0.5) / n;
          s.u[3] = 2.0 * M_PI * t / n;
          s.value = objective_value(pb, s.u);
          cells.push_back(s);
        }
  const std::size_t keep =
      std::min(cells.size(), static_cast<std::size_t>(std::max(1, options.starts)));
  std::partial_sort(cells.begin(), cells.begin() + keep, cells.end(),
                    [](const Start& x, const Start& y) { return x.value < y.value; });
  cells.resize(keep);

  Rng rng(options.seed);
  std::optional<DeterministicMeasurement> best;
  for (Start& s : cells)
    for (double& v : s.u) v += rng.uniform(-0.05, 0.05);
  for (const Start& s : reduced_starts(pb, std::max(16, options.starts)))
    cells.push_back(s);
  for (Start& s : cells) {
    refine(pb, s, options.max_iterations);
    polish(pb, s, 200);
    const GramParams g = decode(s.u);
    if (mismatch(pb, g).max_abs > options.accept) continue;
    if (auto r = accept(g)) {
      if (!best || r->mismatch < best->mismatch) best = r;
    }
  }
  return best;
}

}  // namespace tqlocc

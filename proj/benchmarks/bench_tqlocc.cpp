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


#include <benchmark/benchmark.h>

#include <vector>

#include "tqlocc/invariants.hpp"
#include "tqlocc/locc.hpp"
#include "tqlocc/random.hpp"
#include "tqlocc/schmidt.hpp"
#include "tqlocc/transfer.hpp"

namespace {

using namespace tqlocc;

std::vector<PureState3> states(StateClassTag tag, int n) {
  std::vector<PureState3> out;
  for (int i = 0; i < n; ++i)
    out.push_back(random_state(tag, static_cast<std::uint64_t>(i)));
  return out;
}

void BM_Decompose(benchmark::State& st) {
  const auto s = states(static_cast<StateClassTag>(st.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(schmidt_decompose(s[i++ % 64]));
}
BENCHMARK(BM_Decompose)
    ->Arg(static_cast<int>(StateClassTag::Haar))
    ->Arg(static_cast<int>(StateClassTag::WType));

void BM_Analyze(benchmark::State& st) {
  const auto s = states(StateClassTag::Haar, 64);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(analyze(s[i++ % 64]));
}
BENCHMARK(BM_Analyze);

void BM_DloccFeasible(benchmark::State& st) {
  const auto s = states(StateClassTag::GhzType, 64);
  std::vector<InvariantReport> r;
  for (const auto& x : s) r.push_back(analyze(x));
  std::size_t i = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(dlocc_feasible(r[i % 64], r[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_DloccFeasible);

void BM_VerifyUpdate(benchmark::State& st) {
  Rng rng(5);
  const auto s = states(StateClassTag::Haar, 64);
  std::vector<Measurement2> m;
  for (int i = 0; i < 64; ++i) m.push_back(random_measurement(Qubit::A, rng));
  std::size_t i = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(verify_update(s[i % 64], m[i % 64]));
    ++i;
  }
}
BENCHMARK(BM_VerifyUpdate);

void BM_SearchGhzToBell(benchmark::State& st) {
  const PureState3 ghz = state_from_schmidt(
      SchmidtCoeffs{{M_SQRT1_2, 0.0, 0.0, 0.0, M_SQRT1_2}, 0.0});
  for (auto _ : st)
    benchmark::DoNotOptimize(
        search_deterministic_measurement(ghz, CParams{0, 0, 1, 0, 0}));
}
BENCHMARK(BM_SearchGhzToBell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

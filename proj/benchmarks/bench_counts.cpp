// Copyright 2026 The mdpart Authors
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

#include "mdpart/boxed.hpp"
#include "mdpart/moduli.hpp"
#include "mdpart/multipartition.hpp"
#include "mdpart/series.hpp"
#include "mdpart/staircase.hpp"

namespace {

void BM_LayeredCounts(benchmark::State &state)
{
  const int r = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const bool punctual = state.range(2) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mdpart::partition_counts(r, n, punctual));
  }
}
BENCHMARK(BM_LayeredCounts)
    ->Args({2, 60, 0})
    ->Args({3, 25, 0})
    ->Args({3, 25, 1})
    ->Args({4, 12, 0})
    ->Args({4, 12, 1})
    ->Unit(benchmark::kMillisecond);

void BM_StaircaseCounts(benchmark::State &state)
{
  const int r = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const bool punctual = state.range(2) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mdpart::oracle_counts(r, n, punctual));
  }
}
BENCHMARK(BM_StaircaseCounts)
    ->Args({2, 25, 0})
    ->Args({3, 14, 0})
    ->Args({3, 14, 1})
    ->Args({4, 9, 0})
    ->Args({4, 9, 1})
    ->Unit(benchmark::kMillisecond);

void BM_Pexp(benchmark::State &state)
{
  const auto order = static_cast<std::size_t>(state.range(0));
  mdpart::Series f(order);
  for (std::size_t m = 1; m <= order; ++m) {
    f = f + mdpart::Series::monomial(static_cast<long>(m), m, order);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(mdpart::pexp(f));
  }
}
BENCHMARK(BM_Pexp)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_PiBrute(benchmark::State &state)
{
  const int side = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mdpart::pi_brute({side, side, side}, 40));
  }
}
BENCHMARK(BM_PiBrute)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CheckEuler(benchmark::State &state)
{
  const auto order = static_cast<std::size_t>(state.range(0));
  const std::size_t d = mdpart::default_degree_bound(order);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mdpart::check_conj_euler({3, 0, 24, 1, false}, order, d, d));
  }
}
BENCHMARK(BM_CheckEuler)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

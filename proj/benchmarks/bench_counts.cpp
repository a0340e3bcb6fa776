// Copyright 2026 The metasylv Authors. All Rights Reserved.
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

#include "metasylv/metasylvester.hpp"
#include "metasylv/mpermutation.hpp"
#include "metasylv/tamari.hpp"

namespace {

using namespace metasylv;

void BM_CountClassesFormula(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_classes(n, m));
}
BENCHMARK(BM_CountClassesFormula)->Args({5, 5})->Args({10, 3})->Args({15, 2});

void BM_EnumerateClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for (const auto& cls : enumerate_classes(n, m)) {
      benchmark::DoNotOptimize(cls);
      ++count;
    }
    state.counters["classes"] = static_cast<double>(count);
  }
}
BENCHMARK(BM_EnumerateClasses)->Args({4, 2})->Args({3, 3})->Args({5, 2});

void BM_EnumerateMPermutations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for (const auto& sigma : enumerate_mpermutations(n, m)) {
      benchmark::DoNotOptimize(sigma);
      ++count;
    }
    state.counters["elements"] = static_cast<double>(count);
  }
}
BENCHMARK(BM_EnumerateMPermutations)->Args({4, 2})->Args({3, 3});

void BM_CountBallotPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_ballot_paths(n, 3));
}
BENCHMARK(BM_CountBallotPaths)->Arg(5)->Arg(10);

}  // namespace

BENCHMARK_MAIN();

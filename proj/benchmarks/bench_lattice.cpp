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

#include <random>
#include <vector>

#include "metasylv/lattice.hpp"
#include "metasylv/metasylvester.hpp"
#include "metasylv/mpermutation.hpp"
#include "metasylv/tamari.hpp"
#include "metasylv/verify.hpp"
#include "metasylv/weak_order.hpp"

namespace {

using namespace metasylv;

void BM_WeakJoin(benchmark::State& state) {
  const auto all = all_mpermutations(4, 2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weak_join(all[pick(rng)], all[pick(rng)]));
  }
}
BENCHMARK(BM_WeakJoin);

void BM_WeakMeet(benchmark::State& state) {
  const auto all = all_mpermutations(4, 2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weak_meet(all[pick(rng)], all[pick(rng)]));
  }
}
BENCHMARK(BM_WeakMeet);

void BM_MetaJoin(benchmark::State& state) {
  std::vector<MetasylvesterClass> classes;
  for (const auto& cls : enumerate_classes(4, 2)) classes.push_back(cls);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        meta_join(classes[pick(rng)], classes[pick(rng)]));
  }
}
BENCHMARK(BM_MetaJoin);

void BM_MetasylvesterDiagram(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(metasylvester_diagram(n, m));
}
BENCHMARK(BM_MetasylvesterDiagram)->Args({3, 2})->Args({4, 2})
    ->Unit(benchmark::kMillisecond);

void BM_MTamariRealizations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mtamari_lattice(n, m));
}
BENCHMARK(BM_MTamariRealizations)->Args({3, 2})->Args({4, 2})->Args({3, 3})
    ->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  VerifyOptions options;
  options.max_nm = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_verification(Suite::kAll, options));
  }
}
BENCHMARK(BM_VerifyAll)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

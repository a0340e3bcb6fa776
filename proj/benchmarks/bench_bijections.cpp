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

#include <vector>

#include "metasylv/chain.hpp"
#include "metasylv/decreasing_tree.hpp"
#include "metasylv/metasylvester.hpp"
#include "metasylv/mpermutation.hpp"

namespace {

using namespace metasylv;

std::vector<MetasylvesterClass> classes_of(int n, int m) {
  std::vector<MetasylvesterClass> out;
  for (const auto& cls : enumerate_classes(n, m)) out.push_back(cls);
  return out;
}

void BM_TreeInversions(benchmark::State& state) {
  const auto all = all_mpermutations(4, 2);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tree_inversions(all[k++ % all.size()]));
  }
}
BENCHMARK(BM_TreeInversions);

void BM_TreeCodeRoundTrip(benchmark::State& state) {
  const auto classes = classes_of(4, 3);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        from_tree_code(tree_code(classes[k++ % classes.size()])));
  }
}
BENCHMARK(BM_TreeCodeRoundTrip);

void BM_DecreasingTree(benchmark::State& state) {
  const auto classes = classes_of(4, 3);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto tree = dt(classes[k++ % classes.size()].canonical());
    benchmark::DoNotOptimize(reading_word(tree));
  }
}
BENCHMARK(BM_DecreasingTree);

void BM_PsiRoundTrip(benchmark::State& state) {
  const auto classes = classes_of(4, 3);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        psi(psi_inverse(classes[k++ % classes.size()])));
  }
}
BENCHMARK(BM_PsiRoundTrip);

void BM_MaxClass(benchmark::State& state) {
  const auto all = all_mpermutations(3, 3);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxclass(all[k++ % all.size()]));
  }
}
BENCHMARK(BM_MaxClass);

}  // namespace

// Copyright 2026 The sirtp Authors
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


// Serial reference vs OpenMP kernels. With one hardware thread the two
// should run at the same speed; the parallel versions pay off elsewhere.

#include <benchmark/benchmark.h>

#include "sirtp/bench.h"
#include "sirtp/oracle.h"

namespace sirtp {
namespace {

FamilySpec CoprimeFamily(int count) {
  FamilySpec spec;
  spec.kind = FamilyKind::kCoprimeRandom;
  spec.p_max = 1'000'000;
  spec.count = count;
  spec.seed = 1;
  return spec;
}

BenchOptions NoOracle() {
  BenchOptions options;
  options.oracle_max_area = 0;
  return options;
}

void BM_RunFamilySerial(benchmark::State& state) {
  const FamilySpec spec = CoprimeFamily(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunFamilySerial(spec, NoOracle()));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunFamilySerial)->Arg(1000)->Arg(10000);

void BM_RunFamilyParallel(benchmark::State& state) {
  const FamilySpec spec = CoprimeFamily(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunFamily(spec, NoOracle()));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunFamilyParallel)->Arg(1000)->Arg(10000);

void BM_MinSirtpSerial(benchmark::State& state) {
  const SirtpInstance inst(static_cast<Int>(state.range(0)),
                           static_cast<Int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(MinSirtpSerial(inst));
}
BENCHMARK(BM_MinSirtpSerial)->Args({4, 7})->Args({5, 7})->Args({4, 9});

void BM_MinSirtpParallel(benchmark::State& state) {
  const SirtpInstance inst(static_cast<Int>(state.range(0)),
                           static_cast<Int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(MinSirtp(inst));
}
BENCHMARK(BM_MinSirtpParallel)->Args({4, 7})->Args({5, 7})->Args({4, 9});

}  // namespace
}  // namespace sirtp

BENCHMARK_MAIN();

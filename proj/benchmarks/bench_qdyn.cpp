// Copyright 2026 The qdyn Authors.
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

#include "qdyn/exact/sturm.hpp"
#include "qdyn/fekete.hpp"
#include "qdyn/preper.hpp"

namespace {

using namespace qdyn;

SurdSum golden() { return SurdSum(BigRational(1, 2)) + SurdSum::term(BigRational(1, 2), BigInt(5)); }

void BM_FeketePoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fekete_points(n, 0.5L));
}
BENCHMARK(BM_FeketePoints)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_SturmCount(benchmark::State& state) {
  // (t^2 - 2)(t^2 - t - 1)(t^3 - 3t + 1) on [-s, s], s the golden ratio
  const RatPolynomial p = RatPolynomial({BigRational(-2), BigRational(0), BigRational(1)}) *
                          RatPolynomial({BigRational(-1), BigRational(-1), BigRational(1)}) *
                          RatPolynomial({BigRational(1), BigRational(-3), BigRational(0), BigRational(1)});
  const SurdInterval interval{-golden(), golden()};
  for (auto _ : state) benchmark::DoNotOptimize(count_roots_with_multiplicity(p, interval));
}
BENCHMARK(BM_SturmCount);

void BM_EnumerateIntegers(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_totally_real_integers(SurdSum(2), d));
}
BENCHMARK(BM_EnumerateIntegers)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_PreperSet(benchmark::State& state) {
  const BigRational c = state.range(0) == 0 ? BigRational(-1) : BigRational(1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(totally_real_preper_set(c, 8));
}
BENCHMARK(BM_PreperSet)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

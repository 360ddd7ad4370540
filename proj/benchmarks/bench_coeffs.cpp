// Copyright 2026 The inverf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "inverf/carlitz.hpp"
#include "inverf/coeffs.hpp"
#include "inverf/nested.hpp"

namespace {

void BM_ExactTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(inverf::build_table(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactTable)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_FloatRecurrence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(inverf::taylor_coefficients_float(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FloatRecurrence)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_NestedRoute(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(inverf::erf_rationals_by_nested(n));
}
BENCHMARK(BM_NestedRoute)->Arg(25)->Arg(101);

void BM_CarlitzPolynomials(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(inverf::build_pn(n));
}
BENCHMARK(BM_CarlitzPolynomials)->Arg(25)->Arg(100);

}  // namespace

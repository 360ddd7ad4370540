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

#include "inverf/asym.hpp"
#include "inverf/evaluator.hpp"

namespace {

const inverf::Evaluator& evaluator() {
  static const inverf::Evaluator e(inverf::build_table());
  return e;
}

// Sweeps a fixed grid so that every iteration does the same work.
void sweep(benchmark::State& state, double edge, const inverf::EvalConfig& config) {
  constexpr int kPoints = 1024;
  for (auto _ : state) {
    for (int i = 0; i < kPoints; ++i) {
      const double x = -edge + 2.0 * edge * i / (kPoints - 1);
      benchmark::DoNotOptimize(evaluator().inverf(x, config).value);
    }
  }
  state.SetItemsProcessed(state.iterations() * kPoints);
}

void BM_InverfPolished(benchmark::State& state) { sweep(state, 0.999999, {}); }
BENCHMARK(BM_InverfPolished);

void BM_InverfUnpolishedCentral(benchmark::State& state) {
  inverf::EvalConfig config;
  config.polish = false;
  config.tail_end = 20;
  sweep(state, 0.9, config);
}
BENCHMARK(BM_InverfUnpolishedCentral);

void BM_BoundaryFormula(benchmark::State& state) {
  double x = 0.99;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverf::inverf_boundary(x));
    x = x < 0.999999 ? x + 1e-7 : 0.99;
  }
}
BENCHMARK(BM_BoundaryFormula);

void BM_TableRowTail(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(inverf::tail_sum(0.9999, 9, 3685).value);
}
BENCHMARK(BM_TableRowTail);

}  // namespace

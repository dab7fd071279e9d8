// Copyright 2026 The selforg Authors
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

#include "selforg/selforg.hpp"

namespace {

using namespace selforg;

// Simulated serve throughput over one family sequence; n and k come from
// the benchmark arguments.
template <PolicyKind kKind, Family kFamily>
void BM_Serve(benchmark::State& state) {
  const auto n = state.range(0);
  const auto k = state.range(1);
  const ListState initial = ListState::identity(static_cast<std::size_t>(n));
  const auto seq = kFamily == Family::T1 ? gen_t1(n, k) : gen_t2(n, k);
  for (auto _ : state) {
    auto ledger = serve(kKind, initial, seq, CostModel::Full);
    benchmark::DoNotOptimize(ledger.grand_total);
  }
  state.SetItemsProcessed(state.iterations() * n * k);
}

BENCHMARK_TEMPLATE(BM_Serve, PolicyKind::MTF, Family::T1)
    ->Args({8, 64})->Args({64, 64})->Args({256, 16});
BENCHMARK_TEMPLATE(BM_Serve, PolicyKind::TRANS, Family::T1)
    ->Args({8, 64})->Args({64, 64})->Args({256, 16});
BENCHMARK_TEMPLATE(BM_Serve, PolicyKind::TRANS, Family::T2)
    ->Args({8, 64})->Args({64, 64})->Args({256, 16});
BENCHMARK_TEMPLATE(BM_Serve, PolicyKind::FC, Family::T1)
    ->Args({8, 64})->Args({64, 64})->Args({256, 16});

void BM_Predict(benchmark::State& state) {
  std::int64_t k = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trans_t1(1001, k).total);
    k = k % 4096 + 1;
  }
}
BENCHMARK(BM_Predict);

void BM_VerifyGrid(benchmark::State& state) {
  const std::vector<PolicyKind> algos{PolicyKind::MTF, PolicyKind::TRANS};
  const std::vector<Family> families{Family::T1, Family::T2};
  const auto hi = state.range(0);
  for (auto _ : state) {
    auto report = verify_grid(algos, families, {1, hi}, {1, hi},
                              CostModel::Full,
                              static_cast<unsigned>(state.range(1)));
    benchmark::DoNotOptimize(report.mismatch_count);
  }
}
BENCHMARK(BM_VerifyGrid)
    ->Args({20, 1})->Args({40, 1})->Args({40, 0})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

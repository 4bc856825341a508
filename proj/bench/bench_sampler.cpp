// Copyright 2026 The QSTS Authors
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

#include "qsts/efficiency.hpp"

namespace {

qsts::ProtocolConfig p1_config() {
    qsts::ProtocolConfig c;
    c.kind = qsts::ProtocolKind::P1;
    c.channel = {0.5};
    c.m = 0.5;
    return c;
}

qsts::ProtocolConfig p2_config() {
    qsts::ProtocolConfig c;
    c.kind = qsts::ProtocolKind::P2;
    c.channel = {0.5, 0.7};
    c.m = 0.35;
    return c;
}

void BM_P1Serial(benchmark::State& state) {
    const auto config = p1_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsts::cpro_monte_carlo_serial(config, static_cast<std::uint64_t>(state.range(0)), 7));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_P1Parallel(benchmark::State& state) {
    const auto config = p1_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsts::cpro_monte_carlo(config, static_cast<std::uint64_t>(state.range(0)), 7));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_P2Serial(benchmark::State& state) {
    const auto config = p2_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsts::cpro_monte_carlo_serial(config, static_cast<std::uint64_t>(state.range(0)), 7));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_P2Parallel(benchmark::State& state) {
    const auto config = p2_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsts::cpro_monte_carlo(config, static_cast<std::uint64_t>(state.range(0)), 7));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_P1Serial)->Arg(4096)->Arg(32768)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_P1Parallel)->Arg(4096)->Arg(32768)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_P2Serial)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_P2Parallel)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

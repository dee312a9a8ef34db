// Copyright 2026 The bellsim Authors
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

#include "bellsim/coincidence.hpp"
#include "bellsim/rng.hpp"
#include "bellsim/sim_engine.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace bellsim;

void BM_PhiloxBlock(benchmark::State &state) {
    Philox4x32::Counter ctr{0, 0, 0, 0};
    Philox4x32::Key const key{0x12345678, 0x9abcdef0};
    for (auto _ : state) {
        auto out = Philox4x32::block(ctr, key);
        benchmark::DoNotOptimize(out);
        ++ctr[2];
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PhiloxBlock);

void BM_DrawTrial(benchmark::State &state) {
    std::uint64_t k = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(draw_trial(42, k++));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DrawTrial);

void BM_RunPulsed(benchmark::State &state) {
    auto const n = static_cast<std::uint64_t>(state.range(0));
    auto const config = RunConfig::chsh(ModelId::EprSimple, n, 1234);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_pulsed(config, {1}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunPulsed)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_RunClocked(benchmark::State &state) {
    auto const config = RunConfig::chsh(ModelId::ClockedCore, 200000, 1234);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_clocked(config, {1}));
    state.SetItemsProcessed(state.iterations() * 200000);
}
BENCHMARK(BM_RunClocked)->Unit(benchmark::kMillisecond);

void BM_MatchStreams(benchmark::State &state) {
    auto config = RunConfig::chsh(ModelId::ClockedSimplified,
                                  static_cast<std::uint64_t>(state.range(0)), 7);
    auto const run = run_clocked(config, {1});
    for (auto _ : state)
        benchmark::DoNotOptimize(
            match_streams(run.left, run.right, config.params.coinc_window));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 2);
}
BENCHMARK(BM_MatchStreams)->Arg(200000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State &state) {
    auto const config = RunConfig::chsh(ModelId::Pearle, 0, 9875);
    auto const m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(config, 0.0, 1.0, m, {1}));
    state.SetItemsProcessed(state.iterations() * 360 * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(100000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

/*
 * Copyright 2026 The ParityForge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <benchmark/benchmark.h>

#include "parityforge/parityforge.h"

namespace pf = parityforge;

namespace {

// Chordal graphs at density 0.5; n + m is reported as the complexity argument.
void BM_SynthPco(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    pf::ChordalSample s = pf::gen_random_chordal(n, 0.5, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf::synth_pco(s.graph, s.peo).size);
    }
    state.SetComplexityN(static_cast<int64_t>(n + s.graph.num_edges()));
}
BENCHMARK(BM_SynthPco)->RangeMultiplier(2)->Range(32, 2048)->Complexity(benchmark::oN);

void BM_CheckPco(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    pf::ChordalSample s = pf::gen_random_chordal(n, 0.5, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf::check_pco(s.graph, s.peo).ok);
    }
    state.SetComplexityN(static_cast<int64_t>(n + s.graph.num_edges()));
}
BENCHMARK(BM_CheckPco)->RangeMultiplier(2)->Range(32, 2048)->Complexity(benchmark::oN);

void BM_SynthRandomGnp(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    pf::Graph g = pf::gen_gnp(n, 0.1, 11);
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf::synth_random(g, seed++).size);
    }
    state.SetComplexityN(static_cast<int64_t>(n + g.num_edges()));
}
BENCHMARK(BM_SynthRandomGnp)->RangeMultiplier(2)->Range(32, 1024)->Complexity();

void BM_SynthRandomComplete(benchmark::State &state) {
    pf::Graph g = pf::gen_complete(static_cast<size_t>(state.range(0)));
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf::synth_random(g, seed++).size);
    }
}
BENCHMARK(BM_SynthRandomComplete)->Arg(32)->Arg(64)->Arg(128);

void BM_Recognize(benchmark::State &state) {
    pf::Graph g = pf::gen_gnp(static_cast<size_t>(state.range(0)), 0.3, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf::recognize(g, 100000).membership);
    }
}
BENCHMARK(BM_Recognize)->Arg(8)->Arg(12)->Arg(16);

void BM_OracleCycle(benchmark::State &state) {
    pf::Graph g = pf::gen_cycle(static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf::oracle_min_size(g).min_size);
    }
}
BENCHMARK(BM_OracleCycle)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

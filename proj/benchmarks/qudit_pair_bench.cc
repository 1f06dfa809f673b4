// Copyright 2026 The qudit-pair Authors
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

#include "benchmark/benchmark.h"
#include "qudit_pair/asymptotics.h"
#include "qudit_pair/entanglement.h"
#include "qudit_pair/evolution.h"
#include "qudit_pair/observables.h"
#include "qudit_pair/oracle.h"
#include "qudit_pair/state_prep.h"

using namespace qudit_pair;

static void BM_purity_coherent_closed(benchmark::State &state) {
    SpinMagnitude s(static_cast<int>(state.range(0)));
    double tau = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(purity_coherent_closed(s, tau));
        tau += 0.01;
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_purity_coherent_closed)->RangeMultiplier(10)->Range(10, 100000)->Complexity();

static void BM_purity_uniform_closed(benchmark::State &state) {
    SpinMagnitude s(static_cast<int>(state.range(0)));
    double tau = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(purity_uniform_closed(s, tau));
        tau += 0.01;
    }
}
BENCHMARK(BM_purity_uniform_closed)->RangeMultiplier(10)->Range(10, 100000);

static void BM_f_uniform(benchmark::State &state) {
    SpinMagnitude s(static_cast<int>(state.range(0)));
    double tau = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f_uniform(s, tau));
        tau += 0.01;
    }
}
BENCHMARK(BM_f_uniform)->Arg(9)->Arg(20000);

static void BM_c2_coherent_asymptotic_minima(benchmark::State &state) {
    SpinMagnitude s(static_cast<int>(state.range(0)));
    double tau = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(c2_coherent_asymptotic_minima(s, tau));
        tau += 0.01;
    }
}
BENCHMARK(BM_c2_coherent_asymptotic_minima)->Arg(9)->Arg(20000);

static void BM_evolve_product_purity(benchmark::State &state) {
    SpinMagnitude s(static_cast<int>(state.range(0)));
    SystemConfig cfg(s);
    auto c = coherent_x(s);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(purity(reduced_density(evolve_product(c, c, t, cfg))));
        t += 0.01;
    }
}
BENCHMARK(BM_evolve_product_purity)->RangeMultiplier(4)->Range(8, 128);

static void BM_oracle_purity(benchmark::State &state) {
    SpinMagnitude s(static_cast<int>(state.range(0)));
    SystemConfig cfg(s);
    auto c = coherent_x(s);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_purity(oracle_evolve(c, c, t, cfg)));
        t += 0.01;
    }
}
BENCHMARK(BM_oracle_purity)->RangeMultiplier(4)->Range(8, 128);

static void BM_rotate_y(benchmark::State &state) {
    SpinMagnitude s(static_cast<int>(state.range(0)));
    auto g = ground_state(s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rotate_y(g, 1.5707963267948966));
    }
}
BENCHMARK(BM_rotate_y)->RangeMultiplier(4)->Range(4, 256);

BENCHMARK_MAIN();

/*
 * Copyright 2026 The omegagames Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "omegagames/counterexamples.hpp"
#include "omegagames/positionalize.hpp"
#include "omegagames/random.hpp"
#include "omegagames/solvers.hpp"
#include "omegagames/zielonka.hpp"

using namespace omega;

namespace {

std::vector<Arena>
arenas(std::size_t n, std::uint64_t max_priority)
{
    Rng rng(7);
    std::vector<Arena> out;
    for (int i = 0; i < 16; ++i) out.push_back(random_arena(rng, {n, n, max_priority, 3}));
    return out;
}

void
BM_Recursive(benchmark::State& state)
{
    auto games = arenas(state.range(0), 7);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(solve_parity_recursive(games[i++ % games.size()]));
}
BENCHMARK(BM_Recursive)->RangeMultiplier(4)->Range(16, 1024);

void
BM_ProgressMeasure(benchmark::State& state)
{
    auto games = arenas(state.range(0), 7);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(solve_parity_spm(games[i++ % games.size()]));
}
BENCHMARK(BM_ProgressMeasure)->RangeMultiplier(4)->Range(16, 256);

void
BM_BuildTree(benchmark::State& state)
{
    Rng rng(11);
    cond::ExplicitMuller m;
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (std::uint64_t x = 0; x < k; ++x) m.alphabet.insert(x);
    for (std::uint64_t s = 0; s < (1ull << k); ++s)
        if (rng() & 1) {
            PrioritySet x;
            for (std::uint64_t j = 0; j < k; ++j)
                if (s >> j & 1) x.insert(j);
            m.f0.push_back(x);
        }
    for (auto _ : state) benchmark::DoNotOptimize(build_tree(m));
}
BENCHMARK(BM_BuildTree)->DenseRange(4, 10, 2);

void
BM_Lar(benchmark::State& state)
{
    auto g = split_game_strong_split();
    for (auto _ : state) benchmark::DoNotOptimize(solve_muller(g.arena, g.condition, MullerRoute::Lar));
}
BENCHMARK(BM_Lar);

void
BM_LarRandom(benchmark::State& state)
{
    const auto k = static_cast<std::uint64_t>(state.range(0));
    Rng rng(13);
    auto a = random_arena(rng, {20, 20, k - 1, 3});
    auto spec = random_path_spec(rng, k);
    PrioritySet alphabet;
    for (std::uint64_t x = 0; x < k; ++x) alphabet.insert(x);
    auto m = materialize(spec, alphabet);
    for (auto _ : state) benchmark::DoNotOptimize(solve_muller(a, m, MullerRoute::Lar));
}
BENCHMARK(BM_LarRandom)->DenseRange(2, 6, 2);

void
BM_Positionalize(benchmark::State& state)
{
    Rng rng(17);
    auto a = random_arena(rng, {static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)),
                                5, 3});
    auto r = solve_parity_recursive(a);
    auto s = MemoryStrategy::from_positional(r.strat0);
    for (auto _ : state) benchmark::DoNotOptimize(positionalize(a, cond::MinParity{}, s, r.w0));
}
BENCHMARK(BM_Positionalize)->RangeMultiplier(4)->Range(16, 256);

void
BM_RefuteLadder(benchmark::State& state)
{
    auto g = gen_ladder(static_cast<std::size_t>(state.range(0)));
    RefutationOptions opts;
    opts.memory_bound = 2;
    opts.budget = 1000;
    for (auto _ : state) benchmark::DoNotOptimize(refute_finite_memory(g, opts));
}
BENCHMARK(BM_RefuteLadder)->DenseRange(2, 4, 1);

} // namespace

BENCHMARK_MAIN();

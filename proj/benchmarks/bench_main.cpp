#include "hpath/combinatorics.hpp"
#include "hpath/generators.hpp"
#include "hpath/oracle.hpp"
#include "hpath/partitioner.hpp"

#include <benchmark/benchmark.h>

using namespace hpath;

static void BM_EdgeRankUnrank(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const std::uint64_t total = binomial(40, k);
    EdgeIndex i = 0;
    for (auto _ : state) {
        const auto e = edge_unrank(i, k);
        benchmark::DoNotOptimize(edge_rank(e, k));
        i = (i + 7919) % total;
    }
}
BENCHMARK(BM_EdgeRankUnrank)->Arg(3)->Arg(5)->Arg(8);

static void BM_SolveRandom(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    const Coloring c = random_coloring(n, k, 0.5, 1);
    SolverConfig cfg;
    cfg.record_trace = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(c, cfg));
    }
}
BENCHMARK(BM_SolveRandom)->Args({2, 100})->Args({3, 20})->Args({3, 50})->Args({4, 23})->Args({5, 30});

static void BM_SolveExtremal(benchmark::State& state) {
    const Coloring c = extremal_coloring(ExtremalParams{3, static_cast<std::size_t>(state.range(0))});
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(c));
    }
}
BENCHMARK(BM_SolveExtremal)->Arg(8)->Arg(16);

static void BM_MinUncoveredExact(benchmark::State& state) {
    const Coloring c = random_coloring(static_cast<std::size_t>(state.range(0)), 3, 0.5, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_uncovered_exact(c));
    }
}
BENCHMARK(BM_MinUncoveredExact)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK_MAIN();

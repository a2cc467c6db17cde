#include <benchmark/benchmark.h>

#include "couponlab/dixie.hpp"
#include "couponlab/montecarlo.hpp"
#include "couponlab/race.hpp"
#include "couponlab/stirling.hpp"

using namespace couponlab;

static void BM_AssocStirlingTable(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        StirlingCache cache;
        for (long k = 0; k <= n; ++k) benchmark::DoNotOptimize(cache.get(n, k));
    }
}
BENCHMARK(BM_AssocStirlingTable)->Arg(50)->Arg(200);

static void BM_TieThenAhead(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(tie_then_ahead_prob(state.range(0)));
}
BENCHMARK(BM_TieThenAhead)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);

static void BM_Simultaneous(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(simultaneous_finish_prob(state.range(0)));
}
BENCHMARK(BM_Simultaneous)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);

static void BM_ExpectedT(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(expected_T(state.range(0), 2, 1e-6));
}
BENCHMARK(BM_ExpectedT)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_RaceSimulation(benchmark::State& state) {
    auto rng = substream(42, 0);
    RaceTrajectory traj;
    for (auto _ : state) {
        simulate_race(state.range(0), rng, traj);
        benchmark::DoNotOptimize(traj.winner);
    }
}
BENCHMARK(BM_RaceSimulation)->Arg(6)->Arg(50);
BENCHMARK_MAIN();

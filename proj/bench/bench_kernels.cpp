#include "coinparadox/demo.hpp"
#include "coinparadox/montecarlo.hpp"

#include <benchmark/benchmark.h>
#include <vector>

namespace {

using namespace coinparadox;

const std::vector<double> kFlipTimes{0.0, 0.25, 0.5, 0.75};
const std::vector<Bet> kBets{{0.1, Face::Heads}, {0.3, Face::Heads}, {0.6, Face::Tails}, {0.9, Face::Heads}};
const GameConfig kConfig{1.0, 0.5, 0};

void BM_MonteCarloSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::monte_carlo_compound(kConfig, kFlipTimes, kBets, state.range(0), 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MonteCarloParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo_compound(kConfig, kFlipTimes, kBets, state.range(0), 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RandomizationSerial(benchmark::State& state)
{
    const auto trace = paradox_trace(true);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::randomization_test(trace, 1, {0.0, 1.0}, state.range(0), 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RandomizationParallel(benchmark::State& state)
{
    const auto trace = paradox_trace(true);
    for (auto _ : state)
        benchmark::DoNotOptimize(randomization_test(trace, 1, {0.0, 1.0}, state.range(0), 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_MonteCarloSerial)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomizationSerial)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomizationParallel)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

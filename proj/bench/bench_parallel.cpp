// Serial reference paths (jobs = 1) against their OpenMP counterparts.

#include "chibound/enumerate.hpp"
#include "chibound/search.hpp"
#include "chibound/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace chibound;

namespace {

const std::vector<Graph>& alpha2_graphs()
{
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> out;
        enumerate_triangle_free(9, [&](const Graph& g) { out.push_back(complement(g)); });
        return out;
    }();
    return graphs;
}

void BM_BoundsSweep(benchmark::State& state)
{
    const auto& graphs = alpha2_graphs();
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bounds_sweep(graphs, jobs));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}

void BM_LemmaSweep(benchmark::State& state)
{
    const auto& graphs = alpha2_graphs();
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(lemma_sweep(graphs, jobs));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}

void BM_EnumerateTriangleFree(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) {
        long long count = 0;
        enumerate_triangle_free(n, [&](const Graph&) { ++count; }, {jobs});
        benchmark::DoNotOptimize(count);
    }
}

void BM_EnumerateRamsey(benchmark::State& state)
{
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ramsey_graphs(13, 5, {jobs}));
}

void BM_AnnealRestarts(benchmark::State& state)
{
    // No witness exists on 14 vertices for k = 5, so every restart runs to its limit.
    const int jobs = static_cast<int>(state.range(0));
    const SearchParams params{.n = 14, .k = 5, .max_iterations = 50000, .restarts = 8};
    for (auto _ : state)
        benchmark::DoNotOptimize(anneal_search(params, jobs));
}

} // namespace

BENCHMARK(BM_BoundsSweep)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LemmaSweep)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateTriangleFree)->Args({9, 1})->Args({9, 4})->Args({10, 1})->Args({10, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateRamsey)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AnnealRestarts)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

#include <effdom/graph.hpp>
#include <effdom/search.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_CountHypercube(benchmark::State & state)
{
    const auto g = effdom::hamming_graph(2, static_cast<std::size_t>(state.range(0)));
    effdom::SearchConfig config;
    config.k = state.range(1);
    config.count_only = true;
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const auto outcome = effdom::enumerate_efficient(g, config);
        nodes = outcome.nodes;
        benchmark::DoNotOptimize(outcome.count);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_CountHypercube)->Args({3, 1})->Args({5, 1})->Args({5, 3})->Args({7, 1})->Unit(benchmark::kMillisecond);

void BM_ExistsTernary(benchmark::State & state)
{
    const auto g = effdom::hamming_graph(3, static_cast<std::size_t>(state.range(0)));
    effdom::SearchConfig config;
    config.k = state.range(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(effdom::exists_efficient(g, config).witness);
}
BENCHMARK(BM_ExistsTernary)->Args({2, 1})->Args({4, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_SpectrumCycle(benchmark::State & state)
{
    const auto g = effdom::cycle_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(effdom::k_spectrum(g, 2).counts);
}
BENCHMARK(BM_SpectrumCycle)->RangeMultiplier(2)->Range(6, 48)->Unit(benchmark::kMillisecond);

}

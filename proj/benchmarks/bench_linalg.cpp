#include <effdom/graph.hpp>
#include <effdom/linalg.hpp>

#include <benchmark/benchmark.h>

namespace {

// A + I of a folded cube: singular exactly when 4 divides d + 1.
auto shifted_adjacency(std::size_t d) -> effdom::IntMatrix
{
    auto m = effdom::adjacency_matrix(effdom::folded_cube(d));
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, i) += 1;
    return m;
}

void BM_BareissRank(benchmark::State & state)
{
    const auto m = shifted_adjacency(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(effdom::bareiss_rank(m));
    state.SetLabel(std::to_string(m.rows()) + " rows");
}
BENCHMARK(BM_BareissRank)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_ModularNullspace(benchmark::State & state)
{
    const auto m = shifted_adjacency(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(effdom::modular_nullspace(m));
    state.SetLabel(std::to_string(m.rows()) + " rows");
}
BENCHMARK(BM_ModularNullspace)->DenseRange(5, 11)->Unit(benchmark::kMillisecond);

void BM_IntRank(benchmark::State & state)
{
    const auto m = shifted_adjacency(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(effdom::int_rank(m));
}
BENCHMARK(BM_IntRank)->DenseRange(5, 11)->Unit(benchmark::kMillisecond);

void BM_CharPoly(benchmark::State & state)
{
    const auto m = effdom::adjacency_matrix(effdom::hamming_graph(2, static_cast<std::size_t>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(effdom::char_poly(m));
}
BENCHMARK(BM_CharPoly)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}

#include <effdom/hamming.hpp>

#include <benchmark/benchmark.h>

namespace {

auto field_of(std::int64_t q) -> effdom::Field
{
    return q == 4 ? effdom::Field(2, 2) : effdom::Field(static_cast<std::uint64_t>(q));
}

void BM_BuildPlan(benchmark::State & state)
{
    const auto f = field_of(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(effdom::build_plan(f, static_cast<std::size_t>(state.range(1))));
}
BENCHMARK(BM_BuildPlan)->Args({2, 15})->Args({3, 10})->Args({4, 13})->Unit(benchmark::kMicrosecond);

void BM_VerifyPlanFull(benchmark::State & state)
{
    const auto plan = effdom::build_plan(field_of(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(effdom::verify_plan_full(plan).vertices_checked);
}
BENCHMARK(BM_VerifyPlanFull)->Args({2, 11})->Args({3, 7})->Args({4, 5})->Args({2, 15})->Unit(benchmark::kMillisecond);

void BM_VerifyPlanSampled(benchmark::State & state)
{
    const auto plan = effdom::build_plan(effdom::Field(2, 2), 13);
    for (auto _ : state)
        benchmark::DoNotOptimize(effdom::verify_plan_sampled(plan, static_cast<std::size_t>(state.range(0)), 42).vertices_checked);
}
BENCHMARK(BM_VerifyPlanSampled)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ConstructFunction(benchmark::State & state)
{
    const auto f = field_of(state.range(0));
    const auto d = static_cast<std::size_t>(state.range(1));
    const auto k = static_cast<std::uint64_t>(state.range(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(effdom::construct_function(f, d, k).fibres);
}
BENCHMARK(BM_ConstructFunction)->Args({2, 7, 4})->Args({2, 15, 8})->Args({3, 7, 5})->Args({4, 9, 14})->Unit(benchmark::kMillisecond);

}

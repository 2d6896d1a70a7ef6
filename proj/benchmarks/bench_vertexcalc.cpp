#include <benchmark/benchmark.h>

#include <hft/fixedpoints.hpp>
#include <hft/localize.hpp>
#include <hft/vertexcalc.hpp>

namespace
{

// All fixed points of rank r and length k, one total character each.
void BM_TotalCharacter(benchmark::State &state)
{
    const int rank = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const auto tuples = hft::enumerate_fixed(rank, k);
    for (auto _ : state)
        for (const auto &b : tuples)
            benchmark::DoNotOptimize(hft::total_character(b, 2));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(tuples.size()));
}
BENCHMARK(BM_TotalCharacter)->Args({1, 4})->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_Contribution(benchmark::State &state)
{
    const int rank = static_cast<int>(state.range(0));
    const auto tuples = hft::enumerate_fixed(rank, static_cast<int>(state.range(1)));
    for (auto _ : state)
        for (const auto &b : tuples)
            benchmark::DoNotOptimize(hft::contribution(b, 1, hft::Mode::character));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(tuples.size()));
}
BENCHMARK(BM_Contribution)->Args({1, 4})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_EnumerateFixed(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(hft::enumerate_fixed(4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateFixed)->Arg(4)->Arg(8);

} // namespace

#include <benchmark/benchmark.h>

#include <hft/series.hpp>

namespace
{

void BM_AssembleVertex(benchmark::State &state)
{
    const int rank = static_cast<int>(state.range(0));
    const int order = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(hft::assemble_vertex(rank, 0, order, hft::Mode::character));
}
BENCHMARK(BM_AssembleVertex)->Args({1, 6})->Args({2, 3})->Unit(benchmark::kMillisecond);

// Same series under Calabi-Yau unit frame, specialized late.
void BM_AssembleVertexCalabiYau(benchmark::State &state)
{
    const int rank = static_cast<int>(state.range(0));
    const int order = static_cast<int>(state.range(1));
    const auto sp = hft::Specialization::calabi_yau_unit_frame(rank);
    for (auto _ : state)
        benchmark::DoNotOptimize(hft::assemble_vertex(rank, 1, order, hft::Mode::character, sp));
}
BENCHMARK(BM_AssembleVertexCalabiYau)->Args({1, 6})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_Partition(benchmark::State &state)
{
    hft::CountSeries p{{0, 1}, {1, -3}, {2, hft::Rational(1, 2)}, {5, 7}};
    p[2].canonicalize();
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hft::hft_partition(p, 2, 4, order));
}
BENCHMARK(BM_Partition)->Arg(10)->Arg(40);

} // namespace

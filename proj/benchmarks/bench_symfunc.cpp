#include <benchmark/benchmark.h>

#include "bcgrass/symfunc.hpp"

using namespace bcgrass;

namespace {

void BM_schur_product(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    const auto parts = partitions_of(w);
    for (auto _ : state) {
        for (const auto& la : parts)
            benchmark::DoNotOptimize(schur_product(la, Partition{2, 1}));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(parts.size()));
}
BENCHMARK(BM_schur_product)->Arg(4)->Arg(6)->Arg(8);

void BM_convert_schur_to_power(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    const auto parts = partitions_of(w);
    for (auto _ : state) {
        for (const auto& la : parts)
            benchmark::DoNotOptimize(convert_basis(SymF::generator(Basis::s, la), Basis::p));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(parts.size()));
}
BENCHMARK(BM_convert_schur_to_power)->Arg(6)->Arg(8)->Arg(10);

void BM_box_reduce_power(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (const auto& la : partitions_of(w))
            benchmark::DoNotOptimize(box_reduce(SymF::generator(Basis::p, la), 2, 3));
    }
}
BENCHMARK(BM_box_reduce_power)->Arg(6)->Arg(8);

void BM_character(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    const auto parts = partitions_of(w);
    for (auto _ : state) {
        long long acc = 0;
        for (const auto& la : parts)
            for (const auto& mu : parts) acc += mn_character(la, mu);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(parts.size() * parts.size()));
}
BENCHMARK(BM_character)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

#include <benchmark/benchmark.h>

#include "bcgrass/arakelov.hpp"
#include "bcgrass/bcform.hpp"

using namespace bcgrass;

namespace {

void BM_deformation_oracle(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    const auto parts = partitions_of(w);
    for (auto _ : state) {
        for (const auto& la : parts) {
            const ClassSpec phi(SymF::generator(Basis::p, la), 6, 3);
            benchmark::DoNotOptimize(deformation_oracle(phi, Mode::projflat));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(parts.size()));
}
BENCHMARK(BM_deformation_oracle)->Arg(4)->Arg(6)->Arg(8);

void BM_closed_forms(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    const auto parts = partitions_of(w);
    for (auto _ : state) {
        for (const auto& la : parts)
            benchmark::DoNotOptimize(bc_projflat_multi(la, 6, 3));
    }
}
BENCHMARK(BM_closed_forms)->Arg(6)->Arg(8);

void BM_star_product(benchmark::State& state) {
    const int r = 2, s = 3;
    const auto box = box_partitions(r, s);
    for (auto _ : state) {
        for (const auto& la : box)
            for (const auto& mu : box)
                benchmark::DoNotOptimize(
                    star(ArakelovElem::sigma(la, r, s), ArakelovElem::sigma(mu, r, s)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(box.size() * box.size()));
}
BENCHMARK(BM_star_product);

void BM_power_relation(benchmark::State& state) {
    for (auto _ : state) {
        for (int k = 1; k <= 5; ++k) benchmark::DoNotOptimize(verify_power_relation(k, 2, 3));
    }
}
BENCHMARK(BM_power_relation);

}  // namespace

#include <doctest.h>

#include <thread>
#include <vector>

#include "bcgrass/arakelov.hpp"
#include "bcgrass/bcform.hpp"
#include "bcgrass/harmonic.hpp"
#include "bcgrass/symfunc.hpp"

using namespace bcgrass;

// All values are immutable and operations are pure; the shared state is the
// write-once memo tables behind schur_product, eta_correction, the generator
// recurrences and the harmonic cache. Hammer them from several threads and
// compare against serial baselines.
TEST_CASE("parallel sweeps agree with serial results") {
    // serial baselines
    std::vector<SymF> products;
    for (const auto& la : partitions_of(4))
        for (const auto& mu : partitions_of(3)) products.push_back(schur_product(la, mu));
    const SymF eta_base = eta_correction({3, 2}, 2, 3);
    const Rat h_base = harmonic(500);
    const BCForm oracle_base =
        deformation_oracle(ClassSpec(SymF::generator(Basis::p, {3, 2}), 5, 2), Mode::projflat);

    std::vector<int> mismatches(4, 0);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            for (int rep = 0; rep < 5; ++rep) {
                size_t idx = 0;
                for (const auto& la : partitions_of(4))
                    for (const auto& mu : partitions_of(3)) {
                        if (schur_product(la, mu) != products[idx++]) ++mismatches[static_cast<size_t>(t)];
                    }
                if (eta_correction({3, 2}, 2, 3) != eta_base) ++mismatches[static_cast<size_t>(t)];
                if (harmonic(500) != h_base) ++mismatches[static_cast<size_t>(t)];
                const ClassSpec phi(SymF::generator(Basis::p, {3, 2}), 5, 2);
                if (deformation_oracle(phi, Mode::projflat) != oracle_base)
                    ++mismatches[static_cast<size_t>(t)];
                if (convert_basis(convert_basis(SymF::generator(Basis::s, {3, 2, 1}), Basis::p),
                                  Basis::s) != SymF::generator(Basis::s, {3, 2, 1}))
                    ++mismatches[static_cast<size_t>(t)];
            }
        });
    }
    for (auto& w : workers) w.join();
    for (int m : mismatches) CHECK(m == 0);
}

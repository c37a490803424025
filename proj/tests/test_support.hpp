#pragma once

// Brute-force oracles used only by tests: straight monomial expansions in a
// fixed number of variables. Deliberately independent of the library's
// algebraic routes (tableau rule, Newton recurrences, Frobenius expansion,
// Jacobi-Trudi): Schur polynomials are enumerated from semistandard tableaux
// and products are decomposed by leading-monomial peeling.

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "bcgrass/mpoly.hpp"
#include "bcgrass/partition.hpp"
#include "bcgrass/rational.hpp"

namespace testsupport {

using bcgrass::MPoly;
using bcgrass::Partition;
using bcgrass::Rat;

inline MPoly power_sum_poly(int nvars, int k) {
    MPoly out(nvars);
    for (int i = 0; i < nvars; ++i) {
        MPoly::Mono m(static_cast<size_t>(nvars), 0);
        m[static_cast<size_t>(i)] = k;
        out.add_term(std::move(m), Rat(1));
    }
    return out;
}

/// Schur polynomial s_la(x_1..x_nvars) by direct semistandard-tableau
/// enumeration: rows weakly increase, columns strictly increase, entries <= nvars.
inline MPoly schur_brute(int nvars, const Partition& la) {
    static std::map<std::pair<int, Partition>, MPoly> memo;
    const auto key = std::make_pair(nvars, la);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    MPoly out(nvars);
    if (la.length() > nvars) {
        memo.emplace(key, out);
        return out;
    }
    if (la.empty()) {
        out = MPoly::constant(nvars, Rat(1));
        memo.emplace(key, out);
        return out;
    }

    std::vector<std::vector<int>> tab(static_cast<size_t>(la.length()));
    for (int i = 0; i < la.length(); ++i) tab[static_cast<size_t>(i)].assign(static_cast<size_t>(la.part(i)), 0);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < la.part(i); ++j) cells.emplace_back(i, j);

    std::function<void(size_t)> dfs = [&](size_t idx) {
        if (idx == cells.size()) {
            MPoly::Mono m(static_cast<size_t>(nvars), 0);
            for (const auto& row : tab)
                for (int v : row) ++m[static_cast<size_t>(v - 1)];
            out.add_term(std::move(m), Rat(1));
            return;
        }
        const auto [i, j] = cells[idx];
        int lo = 1;
        if (j > 0) lo = std::max(lo, tab[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
        if (i > 0) lo = std::max(lo, tab[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + 1);
        for (int v = lo; v <= nvars; ++v) {
            tab[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            dfs(idx + 1);
        }
        tab[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    };
    dfs(0);
    memo.emplace(key, out);
    return out;
}

/// Decompose a symmetric polynomial into Schur polynomials by repeatedly
/// peeling the lexicographically leading monomial (whose exponent vector is a
/// partition). Throws if the input is not symmetric enough to terminate.
inline std::map<Partition, Rat> schur_decompose(MPoly f, int nvars) {
    std::map<Partition, Rat> out;
    int guard = 0;
    while (!f.is_zero()) {
        if (++guard > 100000) throw std::runtime_error("schur_decompose: no convergence");
        const auto& lead = *f.terms().rbegin();  // lexicographically largest
        std::vector<int> parts = lead.first;
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1])
                throw std::runtime_error("schur_decompose: leading monomial not a partition");
        const Partition la{parts};
        const Rat c = lead.second;
        out[la] = c;
        f -= schur_brute(nvars, la).scaled(c);
    }
    return out;
}

}  // namespace testsupport

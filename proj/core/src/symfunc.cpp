#include "bcgrass/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace bcgrass {

char basis_letter(Basis b) { return static_cast<char>(b); }

std::optional<Basis> basis_from_letter(char c) {
    switch (c) {
        case 'e': return Basis::e;
        case 'h': return Basis::h;
        case 'p': return Basis::p;
        case 's': return Basis::s;
        default: return std::nullopt;
    }
}

SymF SymF::one(Basis b) { return generator(b, Partition()); }

SymF SymF::generator(Basis b, const Partition& la, const Rat& c) {
    SymF f(b);
    f.add_term(la, c);
    return f;
}

Rat SymF::coeff(const Partition& la) const {
    auto it = terms_.find(la);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SymF::add_term(const Partition& la, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymF& SymF::operator+=(const SymF& o) {
    if (basis_ != o.basis_) throw std::invalid_argument("SymF: basis mismatch in addition");
    for (const auto& [la, c] : o.terms_) add_term(la, c);
    return *this;
}

SymF& SymF::operator-=(const SymF& o) {
    if (basis_ != o.basis_) throw std::invalid_argument("SymF: basis mismatch in subtraction");
    for (const auto& [la, c] : o.terms_) add_term(la, -c);
    return *this;
}

SymF SymF::scaled(const Rat& c) const {
    SymF out(basis_);
    if (c.is_zero()) return out;
    for (const auto& [la, v] : terms_) out.terms_.emplace(la, v * c);
    return out;
}

std::set<int> SymF::degrees() const {
    std::set<int> out;
    for (const auto& [la, c] : terms_) out.insert(la.weight());
    return out;
}

int SymF::homogeneous_degree() const {
    auto d = degrees();
    if (d.empty()) return 0;
    if (d.size() > 1) throw std::invalid_argument("SymF: element is not homogeneous");
    return *d.begin();
}

Rat SymF::coefficient_mass() const {
    Rat m(0);
    for (const auto& [la, c] : terms_) m += c.abs();
    return m;
}

SymF operator+(SymF a, const SymF& b) { return a += b; }
SymF operator-(SymF a, const SymF& b) { return a -= b; }

namespace {

Partition merge_parts(const Partition& la, const Partition& mu) {
    std::vector<int> parts;
    parts.reserve(la.parts().size() + mu.parts().size());
    parts.insert(parts.end(), la.parts().begin(), la.parts().end());
    parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

/// Product in a multiplicative basis (e, h or p): partitions merge.
SymF merge_mul(const SymF& f, const SymF& g) {
    SymF out(f.basis());
    for (const auto& [la, c] : f.terms())
        for (const auto& [mu, d] : g.terms()) out.add_term(merge_parts(la, mu), c * d);
    return out;
}

SymF mul_single(const SymF& f, int k) {
    // multiply by the degree-k generator of f's own (multiplicative) basis
    if (k == 0) return f;
    SymF out(f.basis());
    for (const auto& [la, c] : f.terms()) out.add_term(merge_parts(la, Partition{k}), c);
    return out;
}

}  // namespace

long long lr_coefficient(const Partition& nu, const Partition& la, const Partition& mu) {
    if (la.weight() + mu.weight() != nu.weight()) return 0;
    if (!nu.contains(la) || !nu.contains(mu)) return 0;
    if (mu.empty()) return 1;
    if (nu.length() > la.length() + mu.length()) return 0;

    // Skew cells of nu/la in reading order: rows top to bottom, each row right
    // to left, so the lattice-word condition can be enforced incrementally.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < nu.length(); ++i)
        for (int j = nu.part(i) - 1; j >= la.part(i); --j) cells.emplace_back(i, j);

    const int m = mu.length();
    std::vector<int> counts(static_cast<size_t>(m) + 1, 0);
    std::vector<std::vector<int>> tab(static_cast<size_t>(nu.length()));
    for (int i = 0; i < nu.length(); ++i) tab[static_cast<size_t>(i)].assign(static_cast<size_t>(nu.part(i)), 0);

    long long total = 0;
    std::function<void(size_t)> dfs = [&](size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        const auto [i, j] = cells[idx];
        int lo = 1, hi = m;
        // strictly increase down a column; cells of la above impose nothing
        if (i > 0 && j >= la.part(i - 1)) lo = std::max(lo, tab[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + 1);
        // weakly increase along a row (right neighbour already placed)
        if (j + 1 < nu.part(i)) hi = std::min(hi, tab[static_cast<size_t>(i)][static_cast<size_t>(j + 1)]);
        for (int v = lo; v <= hi; ++v) {
            if (counts[static_cast<size_t>(v)] >= mu.part(v - 1)) continue;
            if (v >= 2 && counts[static_cast<size_t>(v)] >= counts[static_cast<size_t>(v - 1)]) continue;
            tab[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            ++counts[static_cast<size_t>(v)];
            dfs(idx + 1);
            --counts[static_cast<size_t>(v)];
            tab[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
        }
    };
    dfs(0);
    return total;
}

SymF schur_product(const Partition& la, const Partition& mu) {
    static std::mutex mtx;
    static std::map<std::pair<Partition, Partition>, SymF> memo;

    const Partition& a = (mu < la) ? mu : la;
    const Partition& b = (mu < la) ? la : mu;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
    }

    SymF out(Basis::s);
    if (a.empty()) {
        out.add_term(b, Rat(1));
    } else {
        const int total = a.weight() + b.weight();
        for (const auto& nu :
             partitions_of(total, a.length() + b.length(), a.part(0) + b.part(0))) {
            long long c = lr_coefficient(nu, a, b);
            if (c != 0) out.add_term(nu, Rat(static_cast<long>(c)));
        }
    }

    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(std::make_pair(a, b), out);
    return out;
}

long long mn_character(const Partition& la, const Partition& mu) {
    if (la.weight() != mu.weight())
        throw std::invalid_argument("mn_character: |la| != |mu|");
    if (la.weight() == 0) return 1;

    const int m = la.length();
    std::vector<int> beta(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) beta[static_cast<size_t>(i)] = la.part(i) + (m - 1 - i);

    // Border-strip removal on the beta-set: removing a strip of length l moves
    // one entry b to b - l; the sign counts the entries jumped over.
    std::map<std::pair<std::vector<int>, int>, long long> memo;
    std::function<long long(const std::vector<int>&, int)> go =
        [&](const std::vector<int>& b, int idx) -> long long {
        if (idx == mu.length()) return 1;
        auto key = std::make_pair(b, idx);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int len = mu.part(idx);
        long long total = 0;
        for (size_t pos = 0; pos < b.size(); ++pos) {
            const int target = b[pos] - len;
            if (target < 0) continue;
            bool occupied = false;
            int between = 0;
            for (size_t q = 0; q < b.size(); ++q) {
                if (q == pos) continue;
                if (b[q] == target) {
                    occupied = true;
                    break;
                }
                if (b[q] > target && b[q] < b[pos]) ++between;
            }
            if (occupied) continue;
            std::vector<int> nb = b;
            nb[pos] = target;
            std::sort(nb.begin(), nb.end(), std::greater<int>());
            const long long sub = go(nb, idx + 1);
            total += (between % 2 == 0) ? sub : -sub;
        }
        memo[key] = total;
        return total;
    };
    return go(beta, 0);
}

mpz_class z_order(const Partition& mu) {
    mpz_class z = 1;
    int run_value = 0, run_len = 0;
    auto flush = [&]() {
        if (run_len == 0) return;
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(run_value),
                      static_cast<unsigned long>(run_len));
        z *= pw * factorial(static_cast<unsigned long>(run_len));
    };
    for (int p : mu.parts()) {
        if (p == run_value) {
            ++run_len;
        } else {
            flush();
            run_value = p;
            run_len = 1;
        }
    }
    flush();
    return z;
}

namespace {

// Newton-recurrence expansions of single generators, grown on demand.
// p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
// p_k = k h_k - sum_{i<k} h_{k-i} p_i
// k e_k = sum_{i<=k} (-1)^{i-1} p_i e_{k-i}
// k h_k = sum_{i<=k} p_i h_{k-i}
class GeneratorTables {
public:
    SymF p_in_e(int k) { return get(p_in_e_, k, [this](int kk) { return build_p_in_e(kk); }); }
    SymF p_in_h(int k) { return get(p_in_h_, k, [this](int kk) { return build_p_in_h(kk); }); }
    SymF e_in_p(int k) { return get(e_in_p_, k, [this](int kk) { return build_e_in_p(kk); }); }
    SymF h_in_p(int k) { return get(h_in_p_, k, [this](int kk) { return build_h_in_p(kk); }); }

    static GeneratorTables& instance() {
        static GeneratorTables tables;
        return tables;
    }

private:
    template <typename F>
    SymF get(std::vector<SymF>& cache, int k, F build) {
        std::lock_guard<std::mutex> lock(mtx_);
        while (static_cast<int>(cache.size()) <= k) cache.push_back(build(static_cast<int>(cache.size())));
        return cache[static_cast<size_t>(k)];
    }

    SymF build_p_in_e(int k) {
        if (k == 0) return SymF::one(Basis::e);
        SymF acc(Basis::e);
        for (int i = 1; i < k; ++i) {
            SymF t = mul_single(p_in_e_[static_cast<size_t>(k - i)], i);
            acc += (i % 2 == 1) ? t : t.scaled(Rat(-1));
        }
        acc += SymF::generator(Basis::e, Partition{k},
                               (k % 2 == 1) ? Rat(k) : Rat(-k));
        return acc;
    }

    SymF build_p_in_h(int k) {
        if (k == 0) return SymF::one(Basis::h);
        SymF acc = SymF::generator(Basis::h, Partition{k}, Rat(k));
        for (int i = 1; i < k; ++i)
            acc -= mul_single(p_in_h_[static_cast<size_t>(i)], k - i);
        return acc;
    }

    SymF build_e_in_p(int k) {
        if (k == 0) return SymF::one(Basis::p);
        SymF acc(Basis::p);
        for (int i = 1; i <= k; ++i) {
            SymF t = mul_single(e_in_p_[static_cast<size_t>(k - i)], i);
            acc += (i % 2 == 1) ? t : t.scaled(Rat(-1));
        }
        return acc.scaled(Rat(1, k));
    }

    SymF build_h_in_p(int k) {
        if (k == 0) return SymF::one(Basis::p);
        SymF acc(Basis::p);
        for (int i = 1; i <= k; ++i) acc += mul_single(h_in_p_[static_cast<size_t>(k - i)], i);
        return acc.scaled(Rat(1, k));
    }

    std::mutex mtx_;
    std::vector<SymF> p_in_e_, p_in_h_, e_in_p_, h_in_p_;
};

// Frobenius expansions, memoized per partition.
SymF schur_to_p(const Partition& la) {
    static std::mutex mtx;
    static std::map<Partition, SymF> memo;
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = memo.find(la); it != memo.end()) return it->second;
    }
    SymF out(Basis::p);
    for (const auto& mu : partitions_of(la.weight())) {
        const long long chi = mn_character(la, mu);
        if (chi != 0) out.add_term(mu, Rat(static_cast<long>(chi)) / Rat(z_order(mu)));
    }
    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(la, out);
    return out;
}

SymF p_to_s(const Partition& mu) {
    static std::mutex mtx;
    static std::map<Partition, SymF> memo;
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = memo.find(mu); it != memo.end()) return it->second;
    }
    SymF out(Basis::s);
    for (const auto& la : partitions_of(mu.weight())) {
        const long long chi = mn_character(la, mu);
        if (chi != 0) out.add_term(la, Rat(static_cast<long>(chi)));
    }
    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(mu, out);
    return out;
}

SymF det_multiplicative(const std::vector<std::vector<int>>& indices, Basis basis) {
    const size_t n = indices.size();
    if (n > 20) throw std::invalid_argument("det: matrix too large");
    SymF out(basis);
    if (n == 0) return SymF::one(basis);
    std::vector<int> picks;
    std::function<void(size_t, unsigned, int)> rec = [&](size_t row, unsigned used, int sign) {
        if (row == n) {
            std::vector<int> parts = picks;
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            out.add_term(Partition(std::move(parts)), Rat(sign));
            return;
        }
        for (size_t col = 0; col < n; ++col) {
            if (used & (1u << col)) continue;
            const int idx = indices[row][col];
            if (idx < 0) continue;  // generator of negative degree is 0
            int swaps = 0;  // parity of the permutation built so far
            for (size_t c = 0; c < col; ++c)
                if (!(used & (1u << c))) ++swaps;
            if (idx > 0) picks.push_back(idx);
            rec(row + 1, used | (1u << col), (swaps % 2 == 0) ? sign : -sign);
            if (idx > 0) picks.pop_back();
        }
    };
    rec(0, 0u, 1);
    return out;
}

}  // namespace

SymF det_h(const std::vector<std::vector<int>>& indices) {
    return det_multiplicative(indices, Basis::h);
}

SymF jacobi_trudi_h(const Partition& la) {
    const int n = la.length();
    std::vector<std::vector<int>> idx(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) idx[static_cast<size_t>(i)][static_cast<size_t>(j)] = la.part(i) - i + j;
    return det_multiplicative(idx, Basis::h);
}

SymF jacobi_trudi_e(const Partition& la) {
    const Partition conj = la.conjugate();
    const int n = conj.length();
    std::vector<std::vector<int>> idx(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) idx[static_cast<size_t>(i)][static_cast<size_t>(j)] = conj.part(i) - i + j;
    return det_multiplicative(idx, Basis::e);
}

namespace {

SymF schur_chain(const Partition& la, bool column) {
    // product of single-row (h) or single-column (e) Schur generators
    SymF acc = SymF::one(Basis::s);
    for (int part : la.parts()) {
        Partition gen = column ? Partition(std::vector<int>(static_cast<size_t>(part), 1))
                               : Partition{part};
        SymF next(Basis::s);
        for (const auto& [nu, c] : acc.terms()) next += schur_product(nu, gen).scaled(c);
        acc = next;
    }
    return acc;
}

SymF convert_term(const Partition& la, Basis from, Basis to) {
    auto& tables = GeneratorTables::instance();
    auto product_of = [&](const std::function<SymF(int)>& gen, Basis target) {
        SymF acc = SymF::one(target);
        for (int part : la.parts()) acc = merge_mul(acc, gen(part));
        return acc;
    };
    switch (from) {
        case Basis::p:
            if (to == Basis::e) return product_of([&](int k) { return tables.p_in_e(k); }, Basis::e);
            if (to == Basis::h) return product_of([&](int k) { return tables.p_in_h(k); }, Basis::h);
            if (to == Basis::s) return p_to_s(la);
            break;
        case Basis::e:
            if (to == Basis::p) return product_of([&](int k) { return tables.e_in_p(k); }, Basis::p);
            if (to == Basis::s) return schur_chain(la, /*column=*/true);
            break;
        case Basis::h:
            if (to == Basis::p) return product_of([&](int k) { return tables.h_in_p(k); }, Basis::p);
            if (to == Basis::s) return schur_chain(la, /*column=*/false);
            break;
        case Basis::s:
            if (to == Basis::p) return schur_to_p(la);
            if (to == Basis::h) return jacobi_trudi_h(la);
            if (to == Basis::e) return jacobi_trudi_e(la);
            break;
    }
    throw std::logic_error("convert_term: unreachable");
}

}  // namespace

SymF convert_basis(const SymF& f, Basis target) {
    if (f.basis() == target) return f;
    // e <-> h have no direct classical recurrence here; hop through p.
    if ((f.basis() == Basis::e && target == Basis::h) ||
        (f.basis() == Basis::h && target == Basis::e))
        return convert_basis(convert_basis(f, Basis::p), target);
    SymF out(target);
    for (const auto& [la, c] : f.terms()) out += convert_term(la, f.basis(), target).scaled(c);
    return out;
}

SymF symf_mul(const SymF& f, const SymF& g) {
    if (f.basis() == g.basis() && f.basis() != Basis::s) return merge_mul(f, g);
    const SymF fs = convert_basis(f, Basis::s);
    const SymF gs = convert_basis(g, Basis::s);
    SymF out(Basis::s);
    for (const auto& [la, c] : fs.terms())
        for (const auto& [mu, d] : gs.terms()) out += schur_product(la, mu).scaled(c * d);
    return out;
}

SymF box_reduce(const SymF& f, int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("box_reduce: ranks must be positive");
    const SymF in_s = convert_basis(f, Basis::s);
    SymF out(Basis::s);
    for (const auto& [la, c] : in_s.terms())
        if (la.fits_box(r, s)) out.add_term(la, c);
    return out;
}

std::vector<Partition> box_partitions(int r, int s) {
    std::vector<Partition> out;
    for (int d = 0; d <= r * s; ++d)
        for (auto& la : partitions_of(d, s, r)) out.push_back(std::move(la));
    return out;
}

}  // namespace bcgrass

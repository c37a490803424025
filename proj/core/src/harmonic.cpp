#include "bcgrass/harmonic.hpp"

#include <mutex>
#include <stdexcept>

namespace bcgrass {

Rat harmonic(int k) {
    if (k < 0) throw std::invalid_argument("harmonic: negative index");
    static std::mutex mtx;
    static std::vector<Rat> cache{Rat(0)};
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(cache.size()) <= k) {
        const long i = static_cast<long>(cache.size());
        cache.push_back(cache.back() + Rat(1, i));
    }
    return cache[static_cast<size_t>(k)];
}

HarmonicTable::HarmonicTable(int max_index) {
    if (max_index < 0) throw std::invalid_argument("HarmonicTable: negative size");
    cache_.reserve(static_cast<size_t>(max_index) + 1);
    cache_.push_back(Rat(0));
    for (long i = 1; i <= max_index; ++i) cache_.push_back(cache_.back() + Rat(1, i));
}

const Rat& HarmonicTable::at(int k) const {
    if (k < 0 || k >= static_cast<int>(cache_.size()))
        throw std::out_of_range("HarmonicTable: index out of range");
    return cache_[static_cast<size_t>(k)];
}

IdentityReport IdentityReport::make(std::string identity,
                                    std::vector<std::pair<std::string, long long>> params,
                                    Rat lhs, Rat rhs) {
    IdentityReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.holds = (lhs == rhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

IdentityReport verify_identity_sum(int n, int p, int q, int s) {
    Rat lhs(0);
    for (int i = q - s; i <= n - p; ++i)
        lhs += binomial(n - i, p) * binomial(s + i, q) * harmonic(s + i);
    const Rat rhs =
        binomial(n + s + 1, p + q + 1) * (harmonic(n + s + 1) - harmonic(p + q + 1) + harmonic(q));
    return IdentityReport::make(
        "harmonic-binomial-sum", {{"n", n}, {"p", p}, {"q", q}, {"s", s}}, lhs, rhs);
}

IdentityReport verify_identity_binomial(int n, int p, int q, int s) {
    Rat lhs(0);
    for (int i = q - s; i <= n - p; ++i) lhs += binomial(n - i, p) * binomial(s + i, q);
    const Rat rhs = binomial(n + s + 1, p + q + 1);
    return IdentityReport::make("binomial-sum", {{"n", n}, {"p", p}, {"q", q}, {"s", s}}, lhs,
                                rhs);
}

IdentityReport verify_identity_trinomial(int n, int s) {
    if (n < s) throw std::invalid_argument("verify_identity_trinomial: requires n >= s");
    if (s < 1) throw std::invalid_argument("verify_identity_trinomial: requires s >= 1");
    Rat lhs(0);
    for (int i = 0; i <= s; ++i) {
        const Rat term = trinomial(n, i, s - i) * harmonic(n - s + i);
        lhs += (i % 2 == 0) ? -term : term;
    }
    return IdentityReport::make("harmonic-trinomial", {{"n", n}, {"s", s}}, lhs, Rat(1, s));
}

namespace {

using Series = std::vector<Rat>;  // truncated power series in t, index = power

Series mul_trunc(const Series& a, const Series& b, size_t order) {
    Series out(order + 1, Rat(0));
    for (size_t i = 0; i <= order && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; i + j <= order && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

IdentityReport harmonic_gf_check(int N) {
    if (N < 1) throw std::invalid_argument("harmonic_gf_check: order must be positive");
    const size_t order = static_cast<size_t>(N);

    // log(1-t)/(t-1) = (-sum t^k/k) * (-sum t^k)
    Series log1mt(order + 1, Rat(0));
    for (size_t k = 1; k <= order; ++k) log1mt[k] = Rat(-1, static_cast<long>(k));
    Series inv_tm1(order + 1, Rat(-1));
    const Series gf = mul_trunc(log1mt, inv_tm1, order);

    bool all = true;
    for (size_t k = 0; k <= order; ++k)
        if (gf[k] != harmonic(static_cast<int>(k))) all = false;

    // Single-variable shadow of the archimedean perturbation series: the
    // t^{i+1} coefficient of t log(1+xt)/(1+xt) must be (-1)^{i+1} H_i x^i.
    // Coefficients in t are polynomials in x; by homogeneity the t^m
    // coefficient is a monomial c_m x^{m-1}, so it suffices to track c_m.
    const size_t xorder = order + 1;
    Series log_part(xorder + 1, Rat(0));  // [t^k] log(1+xt) = (-1)^{k-1} x^k / k
    for (size_t k = 1; k <= xorder; ++k)
        log_part[k] = Rat((k % 2 == 1) ? 1 : -1, static_cast<long>(k));
    Series inv_part(xorder + 1, Rat(0));  // [t^k] 1/(1+xt) = (-x)^k
    for (size_t k = 0; k <= xorder; ++k) inv_part[k] = Rat((k % 2 == 0) ? 1 : -1);
    const Series shadow = mul_trunc(log_part, inv_part, xorder);
    for (size_t i = 1; i <= order; ++i) {
        // t-shift by one: [t^{i+1}] of the product above is shadow[i]
        const Rat expect = (i % 2 == 1) ? harmonic(static_cast<int>(i))
                                        : -harmonic(static_cast<int>(i));
        if (shadow[i] != expect) all = false;
    }

    IdentityReport r = IdentityReport::make("harmonic-gf", {{"N", N}}, gf[order],
                                            harmonic(N));
    r.holds = r.holds && all;
    if (!all && r.lhs == r.rhs) r.lhs += Rat(1);  // keep holds <=> (lhs == rhs)
    return r;
}

}  // namespace bcgrass

#include "bcgrass/arakelov.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace bcgrass {

namespace {

std::string bracket(const Partition& la) {
    std::string out = "[";
    for (size_t i = 0; i < la.parts().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(la.parts()[i]);
    }
    return out + "]";
}

}  // namespace

ArakelovElem::ArakelovElem(int r, int s) : r_(r), s_(s) {
    if (r < 1 || s < 1) throw std::invalid_argument("ArakelovElem: ranks must be positive");
}

ArakelovElem ArakelovElem::one(int r, int s) {
    ArakelovElem e(r, s);
    e.add_geom(Partition(), Rat(1));
    return e;
}

ArakelovElem ArakelovElem::sigma(const Partition& la, int r, int s) {
    ArakelovElem e(r, s);
    e.add_geom(la, Rat(1));
    return e;
}

ArakelovElem ArakelovElem::arch_class(const SymF& w, int r, int s) {
    ArakelovElem e(r, s);
    const SymF reduced = box_reduce(w, r, s);
    for (const auto& [la, c] : reduced.terms()) e.add_arch(la, c);
    return e;
}

void ArakelovElem::add_geom(const Partition& la, const Rat& c) {
    if (c.is_zero()) return;
    if (!la.fits_box(r_, s_)) throw std::invalid_argument("ArakelovElem: partition outside box");
    auto [it, inserted] = geom_.emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) geom_.erase(it);
    }
}

void ArakelovElem::add_arch(const Partition& la, const Rat& c) {
    if (c.is_zero()) return;
    if (!la.fits_box(r_, s_)) throw std::invalid_argument("ArakelovElem: partition outside box");
    auto [it, inserted] = arch_.emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) arch_.erase(it);
    }
}

ArakelovElem& ArakelovElem::operator+=(const ArakelovElem& o) {
    if (r_ != o.r_ || s_ != o.s_) throw std::invalid_argument("ArakelovElem: rank mismatch");
    for (const auto& [la, c] : o.geom_) add_geom(la, c);
    for (const auto& [la, c] : o.arch_) add_arch(la, c);
    return *this;
}

ArakelovElem ArakelovElem::scaled(const Rat& c) const {
    ArakelovElem out(r_, s_);
    if (c.is_zero()) return out;
    for (const auto& [la, v] : geom_) out.geom_.emplace(la, v * c);
    for (const auto& [la, v] : arch_) out.arch_.emplace(la, v * c);
    return out;
}

Rat ArakelovElem::coefficient_mass() const {
    Rat m(0);
    for (const auto& [la, c] : geom_) m += c.abs();
    for (const auto& [la, c] : arch_) m += c.abs();
    return m;
}

std::string ArakelovElem::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    auto emit = [&](const Rat& c, const std::string& symbol) {
        Rat v = c;
        if (first) {
            first = false;
        } else if (v.sign() < 0) {
            out += " - ";
            v = -v;
        } else {
            out += " + ";
        }
        if (symbol.empty()) {
            out += v.str();
        } else if (v == Rat(1)) {
            out += symbol;
        } else {
            out += v.str() + " * " + symbol;
        }
    };
    for (const auto& [la, c] : geom_) emit(c, la.empty() ? "" : "sigma" + bracket(la));
    for (const auto& [la, c] : arch_) emit(c, "a" + bracket(la));
    return out;
}

ArakelovElem operator+(ArakelovElem a, const ArakelovElem& b) { return a += b; }
ArakelovElem operator-(const ArakelovElem& a, const ArakelovElem& b) {
    ArakelovElem out = a;
    out += b.scaled(Rat(-1));
    return out;
}

HatPoly::HatPoly(const SymF& e_poly, int r_, int s_) : f(Basis::e), r(r_), s(s_) {
    if (r < 1 || s < 1) throw std::invalid_argument("HatPoly: ranks must be positive");
    const SymF in_e = convert_basis(e_poly, Basis::e);
    for (const auto& [la, c] : in_e.terms()) {
        if (la.part(0) > s) continue;  // e_j of more than s roots vanishes
        f.add_term(la, c);
    }
}

namespace {

/// sum_{i=1}^{k-1} H_i p_i(y) h_{k-1-i}(y) in the Schur basis, not yet reduced.
SymF g_raw_schur(int k) {
    static std::mutex mtx;
    static std::map<int, SymF> memo;
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
    }
    SymF acc(Basis::s);
    for (int i = 1; i <= k - 1; ++i) {
        SymF term = convert_basis(SymF::generator(Basis::p, Partition{i}), Basis::s);
        if (k - 1 - i > 0) term = symf_mul(term, SymF::generator(Basis::s, Partition{k - 1 - i}));
        acc += term.scaled(harmonic(i));
    }
    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(k, acc);
    return acc;
}

}  // namespace

SymF relation_g(int k, int r, int s) {
    if (k <= r) throw std::invalid_argument("relation_g: defined only for k > r");
    return box_reduce(g_raw_schur(k), r, s);
}

SymF eta_correction(const Partition& nu, int r, int s) {
    if (nu.length() > s) throw std::invalid_argument("eta_correction: length exceeds s");
    if (nu.part(0) <= r) throw std::invalid_argument("eta_correction: partition lies in the box");

    static std::mutex mtx;
    static std::map<std::tuple<Partition, int, int>, SymF> memo;
    const auto key = std::make_tuple(nu, r, s);
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }

    // Expand det(h_{nu_i - i + j}) along the first row. Every first-row entry
    // has index >= nu_1 > r, so each term extracts exactly one archimedean
    // factor a(g_index), and the cofactor acts through its harmonic image.
    const int l = nu.length();
    SymF total(Basis::s);
    for (int j = 0; j < l; ++j) {
        const int index = nu.part(0) + j;
        std::vector<std::vector<int>> minor(static_cast<size_t>(l - 1),
                                            std::vector<int>(static_cast<size_t>(l - 1)));
        for (int a = 1; a < l; ++a)
            for (int b = 0; b < l - 1; ++b) {
                const int col = (b < j) ? b : b + 1;
                minor[static_cast<size_t>(a - 1)][static_cast<size_t>(b)] = nu.part(a) - a + col;
            }
        SymF minor_s = convert_basis(det_h(minor), Basis::s);
        if (minor_s.is_zero()) continue;
        SymF term = symf_mul(g_raw_schur(index), minor_s);
        total += (j % 2 == 0) ? term : term.scaled(Rat(-1));
    }
    SymF out = box_reduce(total, r, s);

    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(key, out);
    return out;
}

SymF eta_correction_dual(const Partition& nu, int r, int s) {
    if (nu.length() > s) throw std::invalid_argument("eta_correction_dual: length exceeds s");
    if (nu.part(0) <= r) throw std::invalid_argument("eta_correction_dual: partition lies in the box");

    // First-column expansion of the same determinant. The i-th cofactor is the
    // straight Schur class of mu(i) = (nu_1+1, ..., nu_{i-1}+1, nu_{i+1}, ...);
    // entries with index > r extract a g-class directly, in-range entries
    // multiply the recursively straightened cofactor. Terminates because the
    // weight drops, or the weight stays and the length drops.
    const int l = nu.length();
    SymF acc(Basis::s);
    for (int i = 0; i < l; ++i) {
        const int k_i = nu.part(i) - i;
        if (k_i < 0) continue;
        std::vector<int> mu_parts;
        for (int a = 0; a < i; ++a) mu_parts.push_back(nu.part(a) + 1);
        for (int a = i + 1; a < l; ++a) mu_parts.push_back(nu.part(a));
        const Partition mu(std::move(mu_parts));

        SymF term(Basis::s);
        if (k_i > r) {
            term = mu.empty() ? g_raw_schur(k_i)
                              : symf_mul(g_raw_schur(k_i), SymF::generator(Basis::s, mu));
        } else {
            // i == 0 would force k_i = nu_1 > r, so mu starts with nu_1 + 1 here
            if (mu.length() > s) continue;
            SymF inner = eta_correction_dual(mu, r, s);
            if (inner.is_zero()) continue;
            term = (k_i == 0) ? inner : symf_mul(SymF::generator(Basis::s, Partition{k_i}), inner);
        }
        acc += (i % 2 == 0) ? term : term.scaled(Rat(-1));
    }
    return box_reduce(acc, r, s);
}

ArakelovElem normal_form(const HatPoly& P) {
    ArakelovElem out(P.r, P.s);
    const SymF fs = convert_basis(P.f, Basis::s);
    for (const auto& [la, c] : fs.terms()) {
        if (la.length() > P.s) continue;
        if (la.part(0) <= P.r) {
            out.add_geom(la, c);
        } else {
            const SymF eta = eta_correction(la, P.r, P.s);
            for (const auto& [mu, d] : eta.terms()) out.add_arch(mu, c * d);
        }
    }
    return out;
}

ArakelovElem star(const ArakelovElem& x, const ArakelovElem& y) {
    if (x.r() != y.r() || x.s() != y.s())
        throw std::invalid_argument("star: rank mismatch");
    const int r = x.r(), s = x.s();
    ArakelovElem out(r, s);

    for (const auto& [la, c] : x.geom())
        for (const auto& [mu, d] : y.geom()) {
            const SymF prod = schur_product(la, mu);
            for (const auto& [nu, e] : prod.terms()) {
                if (nu.length() > s) continue;
                const Rat v = c * d * e;
                if (nu.part(0) <= r) {
                    out.add_geom(nu, v);
                } else {
                    const SymF eta = eta_correction(nu, r, s);
                    for (const auto& [ka, f] : eta.terms()) out.add_arch(ka, v * f);
                }
            }
        }

    auto mixed = [&](const std::map<Partition, Rat>& geom, const std::map<Partition, Rat>& arch) {
        for (const auto& [la, c] : geom)
            for (const auto& [mu, d] : arch) {
                const SymF prod = schur_product(la, mu);
                for (const auto& [nu, e] : prod.terms())
                    if (nu.fits_box(r, s)) out.add_arch(nu, c * d * e);
            }
    };
    mixed(x.geom(), y.arch());
    mixed(y.geom(), x.arch());
    // arch x arch vanishes
    return out;
}

SymF project(const ArakelovElem& x, ProjPart which) {
    SymF out(Basis::s);
    const auto& src = (which == ProjPart::zeta) ? x.geom() : x.arch();
    for (const auto& [la, c] : src) out.add_term(la, c);
    return out;
}

ArakelovElem hat_chern_S(int k, int r, int s) {
    if (k < 1 || k > r) throw std::invalid_argument("hat_chern_S: requires 1 <= k <= r");

    static std::mutex mtx;
    static std::map<std::tuple<int, int, int>, ArakelovElem> memo;
    const auto key = std::make_tuple(k, r, s);
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }

    const SymF hk_e = convert_basis(SymF::generator(Basis::h, Partition{k}), Basis::e);
    ArakelovElem out = normal_form(HatPoly(hk_e, r, s)).scaled((k % 2 == 0) ? Rat(1) : Rat(-1));
    const SymF correction = box_reduce(g_raw_schur(k), r, s);
    const Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
    for (const auto& [la, c] : correction.terms()) out.add_arch(la, c * sign);

    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(key, out);
    return out;
}

IdentityReport verify_power_relation(int k, int r, int s) {
    if (k < 1 || k > r + s)
        throw std::invalid_argument("verify_power_relation: requires 1 <= k <= r + s");

    // p^_k(S), via the power sum as a polynomial in Chern classes
    const SymF pk_e = convert_basis(SymF::generator(Basis::p, Partition{k}), Basis::e);
    ArakelovElem p_sub(r, s);
    for (const auto& [la, c] : pk_e.terms()) {
        if (la.part(0) > r) continue;  // c^_j(S) = 0 above the rank
        ArakelovElem acc = ArakelovElem::one(r, s);
        for (int part : la.parts()) acc = star(acc, hat_chern_S(part, r, s));
        p_sub += acc.scaled(c);
    }

    // p^_k(Q), straightened
    const ArakelovElem p_quot = normal_form(HatPoly(pk_e, r, s));

    ArakelovElem rhs(r, s);
    if (k >= 2) {
        const SymF pk1 = SymF::generator(Basis::p, Partition{k - 1});
        rhs = ArakelovElem::arch_class(pk1, r, s).scaled(Rat(k) * harmonic(k - 1));
    }
    Rat mass = (p_sub + p_quot - rhs).coefficient_mass();

    // assembled relation c^_t(S) * c^_t(Q) * (1 + p_a(t)) = 1 through degree k
    auto chern_S = [&](int i) {
        return (i == 0) ? ArakelovElem::one(r, s) : hat_chern_S(i, r, s);
    };
    auto chern_Q = [&](int j) -> ArakelovElem {
        if (j == 0) return ArakelovElem::one(r, s);
        if (j > s) return ArakelovElem(r, s);
        return ArakelovElem::sigma(Partition(std::vector<int>(static_cast<size_t>(j), 1)), r, s);
    };
    auto p_a_coeff = [&](int m) -> ArakelovElem {
        // [t^m] p_a(t) = (-1)^m H_{m-1} a(p_{m-1}(y)); zero for m <= 1
        if (m <= 1) return ArakelovElem(r, s);
        const SymF pm = SymF::generator(Basis::p, Partition{m - 1});
        const Rat c = ((m % 2 == 0) ? Rat(1) : Rat(-1)) * harmonic(m - 1);
        return ArakelovElem::arch_class(pm, r, s).scaled(c);
    };
    for (int d = 0; d <= k; ++d) {
        ArakelovElem acc(r, s);
        for (int i = 0; i <= std::min(d, r); ++i)
            for (int j = 0; i + j <= d; ++j) {
                const ArakelovElem pa = p_a_coeff(d - i - j);
                if (d - i - j != 0 && pa.is_zero()) continue;
                acc += star(star(chern_S(i), chern_Q(j)), d - i - j == 0 ? ArakelovElem::one(r, s) : pa);
            }
        const ArakelovElem expected = (d == 0) ? ArakelovElem::one(r, s) : ArakelovElem(r, s);
        mass += (acc - expected).coefficient_mass();
    }

    return IdentityReport::make("power-sum-relation", {{"k", k}, {"r", r}, {"s", s}}, mass,
                                Rat(0));
}

}  // namespace bcgrass

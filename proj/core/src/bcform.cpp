#include "bcgrass/bcform.hpp"

#include <stdexcept>

#include "bcgrass/harmonic.hpp"
#include "bcgrass/mpoly.hpp"

namespace bcgrass {

BCForm::BCForm(int n, int r) : n_(n), r_(r) {
    if (r < 1 || r >= n) throw std::invalid_argument("BCForm: requires 1 <= r < n");
}

Rat BCForm::coeff(int omega, int p) const {
    auto it = terms_.find(BCKey{omega, p});
    return it == terms_.end() ? Rat(0) : it->second;
}

void BCForm::add_term(int omega, int p, const Rat& c) {
    if (c.is_zero()) return;
    if (omega < 0 || p < 0) throw std::invalid_argument("BCForm: negative term key");
    const BCKey key{omega, p};
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BCForm& BCForm::operator+=(const BCForm& o) {
    if (n_ != o.n_ || r_ != o.r_) throw std::invalid_argument("BCForm: rank mismatch");
    for (const auto& [key, c] : o.terms_) add_term(key.omega, key.p, c);
    return *this;
}

BCForm BCForm::scaled(const Rat& c) const {
    BCForm out(n_, r_);
    if (c.is_zero()) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

BCForm BCForm::omega_shifted(int t) const {
    BCForm out(n_, r_);
    for (const auto& [key, v] : terms_) out.add_term(key.omega + t, key.p, v);
    return out;
}

BCForm BCForm::at_omega_zero() const {
    BCForm out(n_, r_);
    for (const auto& [key, v] : terms_)
        if (key.omega == 0) out.add_term(0, key.p, v);
    return out;
}

std::optional<int> BCForm::grading() const {
    std::optional<int> g;
    for (const auto& [key, v] : terms_) {
        const int d = key.omega + key.p;
        if (!g) g = d;
        else if (*g != d) return std::nullopt;
    }
    return g;
}

Rat BCForm::coefficient_mass() const {
    Rat m(0);
    for (const auto& [key, c] : terms_) m += c.abs();
    return m;
}

std::string BCForm::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        Rat v = c;
        if (first) {
            first = false;
        } else if (v.sign() < 0) {
            out += " - ";
            v = -v;
        } else {
            out += " + ";
        }
        out += v.str() + " *";
        if (key.omega == 1) out += " w";
        else if (key.omega > 1) out += " w^" + std::to_string(key.omega);
        out += " p" + std::to_string(key.p) + "(Q)";
    }
    return out;
}

BCForm operator+(BCForm a, const BCForm& b) { return a += b; }
BCForm operator-(const BCForm& a, const BCForm& b) { return a + b.scaled(Rat(-1)); }

ClassSpec::ClassSpec(SymF f, int n, int r) : f_(f.basis()), n_(n), r_(r) {
    if (r < 1 || r >= n) throw std::invalid_argument("ClassSpec: requires 1 <= r < n");
    for (const auto& [la, c] : f.terms()) {
        if (f.basis() == Basis::e && la.part(0) > n) continue;  // e_k = 0 for k > n
        if (f.basis() == Basis::s && la.length() > n) continue; // s_la = 0 in n variables
        f_.add_term(la, c);
    }
}

BCForm bc_flat_power(const Partition& la, int n, int r) {
    BCForm out(n, r);
    if (la.length() == 1) {
        const int k = la.part(0);
        out.add_term(0, k - 1, Rat(k) * harmonic(k - 1));
    }
    return out;
}

BCForm bc_flat_chern(int k, int n, int r) {
    if (k < 1) throw std::invalid_argument("bc_flat_chern: k must be positive");
    BCForm out(n, r);
    if (k > n) return out;  // c_k vanishes above the rank
    const Rat c = harmonic(k - 1);
    out.add_term(0, k - 1, (k % 2 == 1) ? c : -c);
    return out;
}

BCForm bc_flat_schur(const Partition& la, int n, int r) {
    BCForm out(n, r);
    if (!la.is_hook()) return out;
    const int k = la.weight();
    const int arm = la.part(0);
    const Rat c = harmonic(k - 1);
    out.add_term(0, k - 1, ((k - arm) % 2 == 0) ? c : -c);
    return out;
}

BCForm bc_flat_general(const ClassSpec& phi) {
    const int k = phi.degree();
    BCForm out(phi.n(), phi.r());
    if (k == 0) return out;
    const SymF in_p = convert_basis(phi.poly(), Basis::p);
    const Rat alpha = in_p.coeff(Partition{k});
    if (!alpha.is_zero()) out.add_term(0, k - 1, alpha * Rat(k) * harmonic(k - 1));
    return out;
}

BCForm bc_projflat_power(int k, int n, int r) {
    if (k < 1) throw std::invalid_argument("bc_projflat_power: k must be positive");
    BCForm out(n, r);
    out.add_term(0, k - 1, Rat(k) * harmonic(k - 1));
    for (int i = 1; i <= k - 1; ++i) out.add_term(i, k - 1 - i, Rat(-k, i));
    return out;
}

BCForm bc_projflat_chern(int k, int n, int r) {
    if (k < 1) throw std::invalid_argument("bc_projflat_chern: k must be positive");
    BCForm out(n, r);
    if (k > n) return out;
    const int m = k - 1;
    for (int i = 0; i <= m; ++i) {
        const Rat h = harmonic(n) - harmonic(n - i) + harmonic(m - i);
        Rat c = binomial(n, i) * h;
        if ((m - i) % 2 == 1) c = -c;
        out.add_term(i, m - i, c);
    }
    return out;
}

BCForm bc_projflat_multi(const Partition& la, int n, int r) {
    if (la.empty()) throw std::invalid_argument("bc_projflat_multi: empty partition");
    const int k = la.weight();
    const int m = la.length();
    BCForm out(n, r);
    Rat scale(1);
    for (int i = 1; i < m; ++i) scale *= Rat(n);  // n^{m-1}
    for (int i = 0; i < m; ++i)
        out += bc_projflat_power(la.part(i), n, r).omega_shifted(k - la.part(i)).scaled(scale);
    return out;
}

BCForm bc_projflat_general(const ClassSpec& phi) {
    const int k = phi.degree();
    BCForm out(phi.n(), phi.r());
    if (k == 0) return out;
    const SymF in_p = convert_basis(phi.poly(), Basis::p);
    for (const auto& [la, c] : in_p.terms())
        out += bc_projflat_multi(la, phi.n(), phi.r()).scaled(c);
    return out;
}

BCForm bc_twist(const std::vector<BCForm>& tilde_c, int n) {
    if (tilde_c.empty()) throw std::invalid_argument("bc_twist: empty input");
    const int k = static_cast<int>(tilde_c.size());
    BCForm out(tilde_c.front().n(), tilde_c.front().r());
    for (int i = 1; i <= k; ++i)
        out += tilde_c[static_cast<size_t>(i - 1)].omega_shifted(k - i).scaled(binomial(n - i, k - i));
    return out;
}

IdentityReport verify_chern_inverse_power(int k) {
    if (k < 1) throw std::invalid_argument("verify_chern_inverse_power: k must be positive");
    SymF lhs = convert_basis(SymF::generator(Basis::p, Partition{k}), Basis::s);
    if (k % 2 == 1) lhs = lhs.scaled(Rat(-1));
    SymF rhs(Basis::s);
    for (int i = 1; i <= k; ++i) {
        SymF term = convert_basis(SymF::generator(Basis::h, Partition{i}), Basis::s);
        if (k - i > 0)
            term = symf_mul(term, convert_basis(SymF::generator(Basis::e, Partition{k - i}),
                                                Basis::s));
        rhs += term.scaled((i % 2 == 0) ? Rat(i) : Rat(-i));
    }
    return IdentityReport::make("power-chern-inverse", {{"k", k}},
                                (lhs - rhs).coefficient_mass(), Rat(0));
}

namespace {

// The deformation model: all curvature matrices commute and are diagonal, the
// sub-block with eigenvalues a_1..a_r and the quotient block with b_1..b_s.
// The deformed matrix has eigenvalues (1-u) a_t + u w on the sub-block and
// (1-u) b_t + u w on the quotient block (w = 0 in flat mode). Intermediate
// values live in the free commutative ring over the block power sums
// pS_1.., pQ_1.. and w; the variable u is carried in the basis u^m (1-u)^l,
// which is closed under products and integrates in closed form.

struct ULayer {
    // (u-power, (1-u)-power) -> coefficient polynomial
    std::map<std::pair<int, int>, MPoly> terms;
    int nvars;

    explicit ULayer(int nvars_) : nvars(nvars_) {}

    void add(int m, int l, const MPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(std::make_pair(m, l), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    ULayer operator*(const ULayer& o) const {
        ULayer out(nvars);
        for (const auto& [k1, c1] : terms)
            for (const auto& [k2, c2] : o.terms)
                out.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return out;
    }

    ULayer scaled(const Rat& c) const {
        ULayer out(nvars);
        for (const auto& [k, v] : terms) out.add(k.first, k.second, v.scaled(c));
        return out;
    }
};

constexpr int kOmegaVar = 0;

int var_pS(int m) { return m; }                 // 1..k
int var_pQ(int m, int k) { return k + m; }      // k+1..2k

/// Trace of the m-th power of the deformed matrix over the sub-block
/// (sub_only) or the whole matrix. pS_0 = r, pQ_0 = s.
ULayer deformed_trace(int m, int k, int r, int s, Mode mode, bool sub_only) {
    const int nvars = 2 * k + 1;
    ULayer out(nvars);
    const int jmax = (mode == Mode::flat) ? 0 : m;
    for (int j = 0; j <= jmax; ++j) {
        // binomial expansion of ((1-u) a + u w)^m summed over the block
        MPoly c = MPoly::constant(nvars, binomial(m, j));
        if (j > 0) c = c * MPoly::var(nvars, kOmegaVar, j);
        const int deg = m - j;
        MPoly block(nvars);
        if (deg == 0) {
            block = MPoly::constant(nvars, Rat(r));
            if (!sub_only) block += MPoly::constant(nvars, Rat(s));
        } else {
            block = MPoly::var(nvars, var_pS(deg));
            if (!sub_only) block += MPoly::var(nvars, var_pQ(deg, k));
        }
        out.add(j, m - j, c * block);
    }
    return out;
}

Rat beta_integral(int m, int l) {
    // int_0^1 u^m (1-u)^l du
    return Rat(1) / (Rat(m + l + 1) * binomial(m + l, l));
}

BCForm oracle_power_sum(const Partition& la, int n, int r, Mode mode) {
    const int k = la.weight();
    const int s = n - r;
    const int nvars = 2 * k + 1;

    // phi^!(u) = sum_i la_i TrJ(K(u)^{la_i - 1}) prod_{j != i} Tr(K(u)^{la_j})
    ULayer x(nvars);
    for (int i = 0; i < la.length(); ++i) {
        ULayer term = deformed_trace(la.part(i) - 1, k, r, s, mode, /*sub_only=*/true)
                          .scaled(Rat(la.part(i)));
        for (int j = 0; j < la.length(); ++j) {
            if (j == i) continue;
            term = term * deformed_trace(la.part(j), k, r, s, mode, /*sub_only=*/false);
        }
        for (const auto& [key, c] : term.terms) x.add(key.first, key.second, c);
    }

    // (phi^!(u) - phi^!(0)) / u, using ((1-u)^l - 1)/u = -sum_{i<l} (1-u)^i
    ULayer g(nvars);
    for (const auto& [key, c] : x.terms) {
        const auto [m, l] = key;
        if (m >= 1) {
            g.add(m - 1, l, c);
        } else {
            for (int i = 0; i < l; ++i) g.add(0, i, c.scaled(Rat(-1)));
        }
    }

    // integrate over [0,1]
    MPoly integrated(nvars);
    for (const auto& [key, c] : g.terms)
        integrated += c.scaled(beta_integral(key.first, key.second));

    // rewrite sub-block power sums: p_m(S) = n w^m - p_m(Q) (n w^m = 0 when flat)
    for (int m = 1; m <= k; ++m) {
        MPoly repl(nvars);
        if (mode == Mode::projflat)
            repl += MPoly::var(nvars, kOmegaVar, m).scaled(Rat(n));
        repl -= MPoly::var(nvars, var_pQ(m, k));
        integrated = integrated.substituted(var_pS(m), repl);
    }

    BCForm out(n, r);
    for (const auto& [mono, c] : integrated.terms()) {
        const int omega_pow = mono[kOmegaVar];
        int p_index = 0, p_mult = 0;
        for (int m = 1; m <= k; ++m) {
            if (mono[static_cast<size_t>(var_pS(m))] != 0)
                throw std::logic_error("deformation_oracle: unresolved sub-block power sum");
            const int e = mono[static_cast<size_t>(var_pQ(m, k))];
            if (e > 0) {
                p_mult += e;
                p_index = m;
            }
        }
        if (p_mult > 1)
            throw std::logic_error("deformation_oracle: nonlinear quotient power-sum term");
        if (p_mult == 1) {
            out.add_term(omega_pow, p_index, c);
        } else {
            // pure w^{k-1} monomial: expressed on the p_0(Q) = s basis element
            out.add_term(omega_pow, 0, c / Rat(s));
        }
    }
    return out;
}

}  // namespace

BCForm deformation_oracle(const ClassSpec& phi, Mode mode) {
    const int k = phi.degree();  // throws when not homogeneous
    BCForm out(phi.n(), phi.r());
    if (k == 0) return out;
    const SymF in_p = convert_basis(phi.poly(), Basis::p);
    for (const auto& [la, c] : in_p.terms())
        out += oracle_power_sum(la, phi.n(), phi.r(), mode).scaled(c);
    return out;
}

}  // namespace bcgrass

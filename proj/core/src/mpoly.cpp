#include "bcgrass/mpoly.hpp"

#include <stdexcept>

namespace bcgrass {

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly p(nvars);
    p.add_term(Mono(static_cast<size_t>(nvars), 0), c);
    return p;
}

MPoly MPoly::var(int nvars, int index, int exponent) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("MPoly::var: index out of range");
    MPoly p(nvars);
    Mono m(static_cast<size_t>(nvars), 0);
    m[static_cast<size_t>(index)] = exponent;
    p.add_term(std::move(m), Rat(1));
    return p;
}

Rat MPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(Mono m, const Rat& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("MPoly: bad monomial arity");
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly out(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Mono m = m1;
            for (size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
            out.add_term(std::move(m), c1 * c2);
        }
    return out;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

MPoly MPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
    MPoly acc = constant(nvars_, Rat(1));
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

MPoly MPoly::substituted(int index, const MPoly& value) const {
    MPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        const int e = m[static_cast<size_t>(index)];
        Mono rest = m;
        rest[static_cast<size_t>(index)] = 0;
        MPoly term(nvars_);
        term.add_term(std::move(rest), c);
        out += term * value.pow(e);
    }
    return out;
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

}  // namespace bcgrass

#pragma once

#include <map>
#include <vector>

#include "bcgrass/rational.hpp"

namespace bcgrass {

/// Sparse multivariate polynomial over Rat with a fixed number of variables.
/// Monomials are dense exponent vectors. Small and exact; no pretensions of
/// being a general computer-algebra polynomial type.
class MPoly {
public:
    using Mono = std::vector<int>;
    using Terms = std::map<Mono, Rat>;

    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, const Rat& c);
    static MPoly var(int nvars, int index, int exponent = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Rat coeff(const Mono& m) const;

    void add_term(Mono m, const Rat& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Rat& c) const;
    MPoly pow(int k) const;

    /// Replace one variable by a polynomial (same variable count).
    MPoly substituted(int index, const MPoly& value) const;

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
    int nvars_;
    Terms terms_;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);

}  // namespace bcgrass

#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace bcgrass {

/// Exact rational scalar. Canonical at all times: lowest terms, denominator > 0.
/// Every coefficient in this library is a Rat; no floating point anywhere.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    explicit Rat(const mpz_class& n) : v_(n) {}
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "a/b" or "a". Throws std::invalid_argument on malformed input.
    static Rat parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// "a/b", or just "a" when the denominator is 1.
    std::string str() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    Rat inv() const;

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

private:
    mpq_class v_;
};

/// C(n, k); zero whenever k < 0, n < 0 or k > n, so sums over binomials are total.
Rat binomial(long n, long k);

/// n! / (i! j! (n-i-j)!); zero outside the simplex i, j >= 0, i + j <= n.
Rat trinomial(long n, long i, long j);

mpz_class factorial(unsigned long k);

}  // namespace bcgrass

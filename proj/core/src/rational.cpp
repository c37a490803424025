#include "bcgrass/rational.hpp"

#include <stdexcept>

namespace bcgrass {

Rat::Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rat::parse: empty string");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(mpq_class(mpz_class(text)));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("Rat::parse: zero denominator");
        mpq_class q(num, den);
        return Rat(q);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("Rat::parse: malformed rational '" + text + "'");
    }
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1) / v_);
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

Rat trinomial(long n, long i, long j) {
    if (n < 0 || i < 0 || j < 0 || i + j > n) return Rat(0);
    // C(n; i, j) = C(n, i) * C(n - i, j)
    return binomial(n, i) * binomial(n - i, j);
}

mpz_class factorial(unsigned long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

}  // namespace bcgrass

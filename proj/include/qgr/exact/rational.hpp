#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qgr {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational parse_rational(const std::string& s) {
    BigRational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const BigRational& q) { return q.get_str(); }

inline BigRational pow(const BigRational& b, unsigned e) {
    BigRational r(1);
    BigRational base = b;
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

inline BigRational factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return BigRational(r);
}

inline BigRational binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return BigRational(r);
}

inline int sgn(const BigRational& q) { return ::sgn(q); }

}  // namespace qgr

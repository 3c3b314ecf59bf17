#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace gmarkov {

// All integer arithmetic in this library is arbitrary precision.
using Int = mpz_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Exact quotient. Throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0 || a % b != 0)
        throw std::domain_error("exact_div: " + b.get_str() + " does not divide " + a.get_str());
    return a / b;
}

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

// Exact integer square root with a perfect-square certificate.
inline Int isqrt_exact(const Int& a) {
    if (a < 0)
        throw std::domain_error("isqrt_exact: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    if (r * r != a)
        throw std::domain_error("isqrt_exact: " + a.get_str() + " is not a perfect square");
    return r;
}

// Inverse of a modulo m > 1, with gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: " + a.get_str() + " not invertible mod " + m.get_str());
    return r; // canonical representative in [0, m)
}

// Representative of a mod m in [0, m), m > 0.
inline Int mod_reduce(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace gmarkov

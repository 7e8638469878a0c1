#pragma once

#include <gmpxx.h>

#include <string>

namespace gbs {

// Exact arbitrary-precision integer. Labels are unbounded, so nothing in the
// library uses fixed-width arithmetic.
using Int = mpz_class;

inline Int gcd(const Int &a, const Int &b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int &a, const Int &b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int &a)
{
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

Int pow(const Int &base, unsigned long e);

// Floor division; for b > 0 the remainder lies in [0, b).
Int fdiv_q(const Int &a, const Int &b);
Int fdiv_r(const Int &a, const Int &b);

bool divides(const Int &d, const Int &a);

// Largest e with p^e | n; requires n != 0 and p > 1.
unsigned long valuation(const Int &n, const Int &p);

// Strict signed decimal (no whitespace, no empty string).
Int parse_int(const std::string &text);

} // namespace gbs

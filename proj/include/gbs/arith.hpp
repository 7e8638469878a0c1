#pragma once

#include <vector>

#include "gbs/ints.hpp"

namespace gbs {

// Deterministic trial division up to sqrt(n).
bool is_prime(const Int &n);

struct PrimePower {
    Int prime;
    unsigned long exponent = 1;

    Int value() const;
    bool operator==(const PrimePower &) const = default;
};

struct ExtGcd {
    Int g, x, y; // g = gcd(|a|,|b|), a*x + b*y = g
};

// Canonical Bezout pair: among all (x, y) with a*x + b*y = gcd(|a|,|b|), the
// one with smallest |x|, ties resolved to x >= 0. Throws std::domain_error
// when both inputs are zero.
ExtGcd ext_gcd(const Int &a, const Int &b);

// Ascending prime order; empty for n = 1. Throws std::domain_error for n < 1.
std::vector<PrimePower> factorize(const Int &n);

struct MultiBezout {
    Int g;
    std::vector<Int> coefficients;
};

// Left fold of ext_gcd over the list: sum coefficients[i] * values[i] = g.
MultiBezout multi_bezout(const std::vector<Int> &values);

// Data of the isomorphism Z_d = Z_{p_1^{k_1}} x ... x Z_{p_n^{k_n}}.
// backward_exponents[a] = d / p_a^{k_a} is the image of the a-th component
// generator in Z_d; forward_exponents are the Bezout coefficients of the
// backward exponents, so that sum(forward * backward) = 1 (mod d).
struct CrtSplit {
    Int modulus;
    std::vector<PrimePower> components;
    std::vector<Int> forward_exponents;
    std::vector<Int> backward_exponents;
};

// Throws std::domain_error for d < 2.
CrtSplit crt_decomposition(const Int &d);

} // namespace gbs

#include "gbs/arith.hpp"

#include <stdexcept>

namespace gbs {

bool is_prime(const Int &n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (divides(2, n) || divides(3, n))
        return false;
    // 6k +- 1 wheel
    for (Int f = 5; f * f <= n; f += 6) {
        if (divides(f, n) || divides(f + 2, n))
            return false;
    }
    return true;
}

Int PrimePower::value() const
{
    return pow(prime, exponent);
}

ExtGcd ext_gcd(const Int &a, const Int &b)
{
    if (a == 0 && b == 0)
        throw std::domain_error("ext_gcd: both inputs are zero");

    Int g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (b != 0) {
        // x is free modulo |b|/g; take the representative of smallest
        // absolute value, preferring the nonnegative one on a tie.
        Int step = abs(b) / g;
        Int r = fdiv_r(x, step); // in [0, step)
        Int lo = r - step;       // negative candidate; tie goes to r >= 0
        x = abs(lo) < r ? lo : r;
        y = (g - a * x) / b;
    } else {
        x = a > 0 ? 1 : -1;
        y = 0;
    }
    return {g, x, y};
}

std::vector<PrimePower> factorize(const Int &n)
{
    if (n < 1)
        throw std::domain_error("factorize: input must be positive");

    std::vector<PrimePower> out;
    Int m = n;
    auto strip = [&](const Int &p) {
        if (!divides(p, m))
            return;
        unsigned long e = 0;
        while (divides(p, m)) {
            m /= p;
            ++e;
        }
        out.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (Int f = 5; f * f <= m; f += 6) {
        strip(f);
        strip(f + 2);
    }
    if (m > 1)
        out.push_back({m, 1});
    return out;
}

MultiBezout multi_bezout(const std::vector<Int> &values)
{
    if (values.empty())
        throw std::domain_error("multi_bezout: empty list");

    Int g = values[0];
    std::vector<Int> coeff{1};
    for (std::size_t i = 1; i < values.size(); ++i) {
        ExtGcd e = ext_gcd(g, values[i]);
        for (Int &c : coeff)
            c *= e.x;
        coeff.push_back(e.y);
        g = e.g;
    }
    return {g, coeff};
}

CrtSplit crt_decomposition(const Int &d)
{
    if (d < 2)
        throw std::domain_error("crt_decomposition: modulus must be >= 2");

    CrtSplit split;
    split.modulus = d;
    split.components = factorize(d);
    for (const PrimePower &pp : split.components)
        split.backward_exponents.push_back(d / pp.value());

    MultiBezout mb = multi_bezout(split.backward_exponents);
    if (mb.g != 1)
        throw std::logic_error("crt_decomposition: prime-power cofactors are not coprime");
    split.forward_exponents = mb.coefficients;

    Int check = 0;
    for (std::size_t i = 0; i < split.components.size(); ++i)
        check += split.forward_exponents[i] * split.backward_exponents[i];
    if (fdiv_r(check, d) != 1)
        throw std::logic_error("crt_decomposition: composite is not the identity mod d");
    for (std::size_t i = 0; i < split.components.size(); ++i)
        if (gcd(split.forward_exponents[i], split.components[i].prime) != 1)
            throw std::logic_error("crt_decomposition: forward exponent shares its prime");
    return split;
}

} // namespace gbs

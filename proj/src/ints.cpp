#include "gbs/ints.hpp"

#include <stdexcept>

namespace gbs {

Int pow(const Int &base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int fdiv_q(const Int &a, const Int &b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int fdiv_r(const Int &a, const Int &b)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool divides(const Int &d, const Int &a)
{
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

unsigned long valuation(const Int &n, const Int &p)
{
    if (n == 0 || p < 2)
        throw std::domain_error("valuation: need n != 0 and p > 1");
    Int m = abs(n);
    unsigned long e = 0;
    while (divides(p, m)) {
        m /= p;
        ++e;
    }
    return e;
}

Int parse_int(const std::string &text)
{
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (text.size() == start)
        throw std::domain_error("malformed integer '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::domain_error("malformed integer '" + text + "'");
    return Int(text, 10);
}

} // namespace gbs

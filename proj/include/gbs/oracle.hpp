#pragma once

#include <string>
#include <vector>

#include "gbs/ints.hpp"
#include "gbs/tree.hpp"
#include "gbs/words.hpp"

namespace gbs {

// Finite group as a multiplication table; identity at index 0. The table is
// checked at construction (exhaustive associativity up to order 64, sampled
// above) and the nilpotency class is computed from the lower central series.
struct FiniteGroupTable {
    std::size_t order = 1;
    std::vector<int> mul; // order x order, row-major
    std::vector<int> inv;
    unsigned nilpotency_class = 0;
    std::string tag;

    int at(int x, int y) const { return mul[std::size_t(x) * order + std::size_t(y)]; }
    int power(int g, const Int &e) const;

    static FiniteGroupTable abelian(const std::vector<Int> &cyclic_orders);
    static FiniteGroupTable unitriangular3(const Int &p); // UT_3(Z_p), class 2
};

// Images of the vertex generators, declaration order; every edge relation
// holds in the target by construction.
struct Homomorphism {
    std::vector<int> images;
};

// All abelian groups of order <= max_order whose prime support lies in
// `primes`, plus UT_3(Z_p) for each listed p with p^3 <= max_order.
std::vector<FiniteGroupTable> build_catalog(const Int &max_order, const std::vector<Int> &primes);

// Exhaustive root-first propagation: every image of the first declared
// generator, then per edge the solutions g of g^{label_v} = parent^{label_u}.
std::vector<Homomorphism> enumerate_homs(const LabeledTree &tree, const FiniteGroupTable &target);

// One-sided test: `annihilated` means no witness was found up to the catalog,
// a necessary condition for membership relative to it, never a certificate.
struct AnnihilationResult {
    bool annihilated = true;
    std::string witness_tag;
    Homomorphism witness;
    int witness_image = 0;
};

AnnihilationResult annihilation_check(const LabeledTree &tree, const GroupWord &element,
                                      const std::vector<FiniteGroupTable> &catalog);

// Same test restricted to p-groups of order <= max_order.
AnnihilationResult annihilation_check_p(const LabeledTree &tree, const GroupWord &element,
                                        const Int &p, const Int &max_order);

// With k = kappa*s_exp and l = lambda*r_exp: true iff gcd(kappa, lambda) = 1,
// which certifies [a^{s_exp}, b^{r_exp}] in gamma_omega. Throws
// std::domain_error unless s_exp | k and r_exp | l.
bool coprime_commutator_check(const Int &k, const Int &l, const Int &s_exp, const Int &r_exp);

} // namespace gbs

#pragma once

#include <string>
#include <vector>

#include "gbs/arith.hpp"
#include "gbs/tree.hpp"
#include "gbs/words.hpp"

namespace gbs {

// Shared/unshared prime-power data of the pair (k, l):
// k = xi_k * prod(only_k), l = xi_l * prod(only_l),
// xi_k = prod p_i^{kappa_i}, xi_l = prod p_i^{lambda_i} over the shared primes.
struct SegmentFactorization {
    Int k, l;

    struct Shared {
        Int prime;
        unsigned long kappa, lambda;

        bool operator==(const Shared &) const = default;
    };

    std::vector<Shared> shared; // ascending prime order
    std::vector<PrimePower> only_k, only_l;
    Int xi_k, xi_l;
};

SegmentFactorization segment_factorization(const Int &k, const Int &l);

using CommutatorSet = std::vector<Commutator>;

// Generators of gamma_omega(<a,b | a^k = b^l>) as a normal closure: for each
// shared prime, [a^{p^kappa}, b^{xi_l/p^lambda}] and [a^{xi_k/p^kappa}, b^{p^lambda}]
// (the latter canonicalized from [b^{p^lambda}, a^{...}]); for gcd(k,l) = 1
// the single commutator [a, b] (gamma_omega = G').
CommutatorSet gamma_segment_set(const Int &k, const Int &l,
                                const std::string &a = "a", const std::string &b = "b");

struct AbelianFactor {
    unsigned long free_rank = 0;
    std::vector<PrimePower> components;
};

// Cor. for free products of finite abelian groups: all component commutators
// across distinct factors with distinct primes. Factors with a free part are
// rejected (no finite canonical generating set exists for that case).
CommutatorSet gamma_free_product_abelian(const std::vector<AbelianFactor> &factors);

enum class GammaMode { path, center_order };

struct GammaPairBlock {
    std::size_t u, v;
    Int k, l; // exponents the pair set is computed from
    CommutatorSet elements;
    // center-power commutators removed by the filter; each drop is proved
    // trivial through the word problem
    CommutatorSet dropped;
};

struct GammaTreeResult {
    GammaMode mode = GammaMode::center_order;
    bool filtered = true;
    bool degenerate = false; // single-vertex tree: gamma_omega is trivial
    std::vector<GammaPairBlock> pairs;
    CommutatorSet elements; // union over pairs, declaration order
};

GammaTreeResult gamma_omega_tree(const LabeledTree &tree,
                                 GammaMode mode = GammaMode::center_order,
                                 bool filter_trivial = true);

// k, l powers of one common prime (1 allowed for both).
bool is_residually_nilpotent_segment(const Int &k, const Int &l);

// gcd(k, l) = 1, i.e. gamma_omega(G) = G'.
bool gamma_is_commutator_subgroup(const Int &k, const Int &l);

} // namespace gbs

#pragma once

#include <string>
#include <vector>

#include "gbs/abelian.hpp"
#include "gbs/arith.hpp"
#include "gbs/tree.hpp"
#include "gbs/words.hpp"

namespace gbs {

// k = p^kappa * k1, l = p^lambda * l1 with p coprime to k1, l1; d1 = gcd(k1, l1).
struct NpSegmentData {
    Int p;
    unsigned long kappa = 0, lambda = 0;
    Int k1, l1, d1;
};

NpSegmentData np_segment_data(const Int &k, const Int &l, const Int &p);

// Mixed generator-set element: either the power word x_u^a x_v^{-b} or the
// commutator [x_u^a, x_v^b].
struct SetElement {
    enum class Kind { power_word, commutator };

    Kind kind = Kind::commutator;
    std::string u;
    Int a;
    std::string v;
    Int b;

    GroupWord word() const;
    std::string str() const;

    bool operator==(const SetElement &) const = default;
};

using ElementSet = std::vector<SetElement>;

// Generators of (N_p)_omega(<a,b | a^k = b^l>): a^{k/d1} b^{-l/d1} (dropped
// when d1 = 1, it is then the defining relator), [a, b^{p^lambda}] and
// [a^{p^kappa}, b] (collapsed to [a, b] when kappa or lambda vanishes).
// Commutators with a central-power side are trivial and filtered out, the
// drop proved through the word problem.
ElementSet np_segment_set(const Int &k, const Int &l, const Int &p,
                          const std::string &a = "a", const std::string &b = "b");

struct NpPairBlock {
    std::size_t u, v;
    Int k, l;
    ElementSet elements;
    ElementSet dropped;
};

struct NpTreeResult {
    Int p;
    bool degenerate = false;
    std::vector<NpPairBlock> pairs;
    ElementSet elements; // union over pairs
};

// Union over all vertex pairs of the segment sets at the path-relation
// exponents; central-power commutators are filtered against the full tree
// group's center.
NpTreeResult np_omega_tree(const LabeledTree &tree, const Int &p);

bool is_residually_p_segment(const Int &k, const Int &l, const Int &p);

// G^{ab} = Z_d x Z with explicit unimodular basis change:
// gamma = a^{k/d} b^{-l/d}, delta = a^y b^x; a = gamma^x delta^{l/d},
// b = gamma^{-y} delta^{k/d}; det ((k/d, -l/d), (y, x)) = 1.
struct BasisChange {
    Int d;    // gcd(k, l)
    Int x, y; // x*k + y*l = d
    Int k_over_d, l_over_d;

    AbelianInvariants invariants() const;
};

BasisChange abelianize_segment(const Int &k, const Int &l);

// One relation row per vertex pair for the quotient of G by the (N_p)_omega
// generators: power-word exponents (K/d1, -L/d1) when d1 > 1, otherwise the
// unreduced path-relation exponents (K, -L). Rows in declaration-pair order.
IntMatrix np_quotient_matrix(const LabeledTree &tree, const Int &p);

// Presentation rows of the subgroup generated by x_v^{p^{M_v}} inside the
// abelianization of that quotient, where M_v is the largest p-valuation of
// x_v's exponent among its rows; each pair relation is raised to the least
// power making both sides powers of the new generators.
struct CentralSubgroupData {
    std::vector<unsigned long> m; // M_v per vertex
    IntMatrix rows;
};

CentralSubgroupData np_central_subgroup_matrix(const LabeledTree &tree, const Int &p);

} // namespace gbs

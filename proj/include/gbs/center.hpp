#pragma once

#include "gbs/tree.hpp"

namespace gbs {

// Minimal positive exponents r_v with all x_v^{r_v} equal and central;
// Z(G) = <x_v^{r_v}>. For every edge, r_u * label_v = r_v * label_u.
struct CenterData {
    std::vector<Int> exponents;
    bool whole_group = false; // single vertex: G = Z, the center is everything
};

CenterData center_exponents(const LabeledTree &tree);

// v -> r / r_v with r = lcm of all r_v; the homomorphism onto Z that kills G'.
std::vector<Int> modulus_hom(const LabeledTree &tree);

// Same tree shape with finite cyclic vertex groups of order orders[v].
struct FiniteCyclicTree {
    LabeledTree tree;
    std::vector<Int> orders;
};

// G/Z(G) as a tree of finite cyclic groups, orders d_v = r_v.
FiniteCyclicTree quotient_by_center(const LabeledTree &tree);

// For a tree of finite cyclic p-groups: the edge whose edge group is the
// center. Requires every order and label to be a power of p with each label
// dividing its endpoint's order; throws std::domain_error otherwise.
std::size_t center_of_p_tree(const FiniteCyclicTree &fct, const Int &p);

} // namespace gbs

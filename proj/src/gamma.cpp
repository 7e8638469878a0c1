#include "gbs/gamma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gbs/center.hpp"

namespace gbs {

SegmentFactorization segment_factorization(const Int &k, const Int &l)
{
    if (k < 1 || l < 1)
        throw std::domain_error("segment_factorization: exponents must be positive");

    SegmentFactorization f;
    f.k = k;
    f.l = l;
    f.xi_k = 1;
    f.xi_l = 1;

    auto fk = factorize(k), fl = factorize(l);
    std::map<Int, unsigned long> in_l;
    for (const PrimePower &pp : fl)
        in_l[pp.prime] = pp.exponent;

    for (const PrimePower &pp : fk) {
        auto it = in_l.find(pp.prime);
        if (it != in_l.end()) {
            f.shared.push_back({pp.prime, pp.exponent, it->second});
            f.xi_k *= pp.value();
            f.xi_l *= pow(pp.prime, it->second);
        } else {
            f.only_k.push_back(pp);
        }
    }
    for (const PrimePower &pp : fl)
        if (!std::any_of(f.shared.begin(), f.shared.end(),
                         [&](const auto &s) { return s.prime == pp.prime; }))
            f.only_l.push_back(pp);
    return f;
}

namespace {

void push_unique(CommutatorSet &set, const Commutator &c)
{
    if (std::find(set.begin(), set.end(), c) == set.end())
        set.push_back(c);
}

} // namespace

CommutatorSet gamma_segment_set(const Int &k, const Int &l,
                                const std::string &a, const std::string &b)
{
    SegmentFactorization f = segment_factorization(k, l);
    CommutatorSet set;
    if (f.shared.empty()) {
        // gcd(k, l) = 1: gamma_omega = G', generated by the single commutator
        set.push_back({a, 1, b, 1});
        return set;
    }
    for (const auto &s : f.shared) {
        Int c = pow(s.prime, s.kappa);
        Int d = f.xi_l / pow(s.prime, s.lambda);
        push_unique(set, {a, c, b, d});
    }
    for (const auto &s : f.shared) {
        Int e = pow(s.prime, s.lambda);
        Int fexp = f.xi_k / pow(s.prime, s.kappa);
        // [b^e, a^f] reoriented to the declaration order
        push_unique(set, {a, fexp, b, e});
    }
    return set;
}

CommutatorSet gamma_free_product_abelian(const std::vector<AbelianFactor> &factors)
{
    for (const AbelianFactor &f : factors)
        if (f.free_rank > 0)
            throw std::domain_error("gamma_free_product_abelian: free-abelian direct factors are "
                                    "not supported (no finite canonical generating set)");

    // one generator letter per factor: x, y, z, ... then g<i>_
    auto gen_name = [&](std::size_t factor, std::size_t comp) {
        std::string base = factor < 3 ? std::string(1, char('x' + factor))
                                      : "g" + std::to_string(factor + 1) + "_";
        return base + std::to_string(comp + 1);
    };

    CommutatorSet set;
    for (std::size_t i1 = 0; i1 < factors.size(); ++i1)
        for (std::size_t i2 = i1 + 1; i2 < factors.size(); ++i2)
            for (std::size_t j1 = 0; j1 < factors[i1].components.size(); ++j1)
                for (std::size_t j2 = 0; j2 < factors[i2].components.size(); ++j2) {
                    if (factors[i1].components[j1].prime == factors[i2].components[j2].prime)
                        continue;
                    set.push_back({gen_name(i1, j1), 1, gen_name(i2, j2), 1});
                }
    return set;
}

GammaTreeResult gamma_omega_tree(const LabeledTree &tree, GammaMode mode, bool filter_trivial)
{
    tree.validate();
    GammaTreeResult result;
    result.mode = mode;
    result.filtered = filter_trivial;
    if (tree.vertices.size() == 1) {
        result.degenerate = true; // G = Z, residually nilpotent
        return result;
    }
    if (!tree.normalized())
        throw std::domain_error("gamma_omega_tree: tree labels must be positive");

    std::vector<Int> rcenter = center_exponents(tree).exponents;
    std::vector<Int> orders;
    if (mode == GammaMode::center_order)
        orders = quotient_by_center(tree).orders;

    for (auto [i, j] : vertex_pairs(tree)) {
        GammaPairBlock block;
        block.u = i;
        block.v = j;
        if (mode == GammaMode::path) {
            PathRelation rel = path_relation(tree, i, j);
            block.k = rel.source_exp;
            block.l = rel.target_exp;
        } else {
            block.k = orders[i];
            block.l = orders[j];
        }
        CommutatorSet raw =
            gamma_segment_set(block.k, block.l, tree.vertices[i], tree.vertices[j]);
        for (const Commutator &c : raw) {
            // center-power commutators: one side is a power of the central
            // element, so the commutator is trivial
            bool central_side =
                divides(rcenter[i], c.left_exp) || divides(rcenter[j], c.right_exp);
            if (filter_trivial && central_side) {
                if (!is_trivial(tree, c.word()))
                    throw std::logic_error("gamma_omega_tree: filtered element is not trivial");
                block.dropped.push_back(c);
            } else {
                block.elements.push_back(c);
            }
        }
        for (const Commutator &c : block.elements)
            push_unique(result.elements, c);
        result.pairs.push_back(std::move(block));
    }
    return result;
}

bool is_residually_nilpotent_segment(const Int &k, const Int &l)
{
    if (k < 1 || l < 1)
        throw std::domain_error("is_residually_nilpotent_segment: exponents must be positive");
    auto fk = factorize(k), fl = factorize(l);
    if (fk.size() > 1 || fl.size() > 1)
        return false;
    if (fk.empty() || fl.empty())
        return true; // k or l is 1
    return fk[0].prime == fl[0].prime;
}

bool gamma_is_commutator_subgroup(const Int &k, const Int &l)
{
    if (k < 1 || l < 1)
        throw std::domain_error("gamma_is_commutator_subgroup: exponents must be positive");
    return gcd(k, l) == 1;
}

} // namespace gbs

#include "gbs/np.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gbs/center.hpp"

namespace gbs {

NpSegmentData np_segment_data(const Int &k, const Int &l, const Int &p)
{
    if (k < 1 || l < 1)
        throw std::domain_error("np_segment_data: exponents must be positive");
    if (!is_prime(p))
        throw std::domain_error("np_segment_data: p must be prime");

    NpSegmentData d;
    d.p = p;
    d.k1 = k;
    d.l1 = l;
    while (divides(p, d.k1)) {
        d.k1 /= p;
        ++d.kappa;
    }
    while (divides(p, d.l1)) {
        d.l1 /= p;
        ++d.lambda;
    }
    d.d1 = gcd(d.k1, d.l1);
    return d;
}

GroupWord SetElement::word() const
{
    if (kind == Kind::power_word) {
        GroupWord w;
        w.syllables = {{u, a}, {v, -b}};
        return free_reduce(w);
    }
    return Commutator{u, a, v, b}.word();
}

std::string SetElement::str() const
{
    if (kind == Kind::commutator)
        return to_string(Commutator{u, a, v, b});
    std::ostringstream os;
    os << u;
    if (a != 1)
        os << "^" << a.get_str();
    os << " * " << v << "^" << Int(-b).get_str();
    return os.str();
}

namespace {

// Construction-time simplification of the two-generator set's three elements:
// drop the power word when d1 = 1 (it is the defining relator); when kappa or
// lambda vanishes one commutator becomes [a, b] and subsumes the other.
ElementSet np_segment_raw(const Int &k, const Int &l, const NpSegmentData &d,
                          const std::string &a, const std::string &b)
{
    ElementSet set;
    if (d.d1 > 1)
        set.push_back({SetElement::Kind::power_word, a, k / d.d1, b, l / d.d1});
    if (d.kappa == 0 || d.lambda == 0) {
        set.push_back({SetElement::Kind::commutator, a, 1, b, 1});
    } else {
        set.push_back({SetElement::Kind::commutator, a, 1, b, pow(d.p, d.lambda)});
        set.push_back({SetElement::Kind::commutator, a, pow(d.p, d.kappa), b, 1});
    }
    return set;
}

} // namespace

// Commutators with a central-power side are trivial and are filtered out;
// the drop is re-proved through the word problem each time.
static bool central_side_filter(const LabeledTree &tree, const std::vector<Int> &rcenter,
                                const SetElement &e)
{
    if (e.kind != SetElement::Kind::commutator)
        return false;
    if (!divides(rcenter[tree.index_of(e.u)], e.a) && !divides(rcenter[tree.index_of(e.v)], e.b))
        return false;
    if (!is_trivial(tree, e.word()))
        throw std::logic_error("np filter: central-power element is not trivial");
    return true;
}

ElementSet np_segment_set(const Int &k, const Int &l, const Int &p,
                          const std::string &a, const std::string &b)
{
    NpSegmentData d = np_segment_data(k, l, p);
    ElementSet raw = np_segment_raw(k, l, d, a, b);

    // filter against the segment group <a, b | a^k = b^l> itself
    LabeledTree segment;
    segment.vertices = {a, b};
    segment.edges = {{0, 1, k, l}};
    std::vector<Int> rcenter = center_exponents(segment).exponents;
    ElementSet set;
    for (const SetElement &e : raw)
        if (!central_side_filter(segment, rcenter, e))
            set.push_back(e);
    return set;
}

NpTreeResult np_omega_tree(const LabeledTree &tree, const Int &p)
{
    tree.validate();
    if (!is_prime(p))
        throw std::domain_error("np_omega_tree: p must be prime");

    NpTreeResult result;
    result.p = p;
    if (tree.vertices.size() == 1) {
        result.degenerate = true; // G = Z, residually a finite p-group
        return result;
    }
    if (!tree.normalized())
        throw std::domain_error("np_omega_tree: tree labels must be positive");

    std::vector<Int> rcenter = center_exponents(tree).exponents;
    for (auto [i, j] : vertex_pairs(tree)) {
        PathRelation rel = path_relation(tree, i, j);
        NpPairBlock block;
        block.u = i;
        block.v = j;
        block.k = rel.source_exp;
        block.l = rel.target_exp;
        NpSegmentData d = np_segment_data(block.k, block.l, p);
        for (const SetElement &e :
             np_segment_raw(block.k, block.l, d, tree.vertices[i], tree.vertices[j])) {
            if (central_side_filter(tree, rcenter, e))
                block.dropped.push_back(e);
            else
                block.elements.push_back(e);
        }
        for (const SetElement &e : block.elements)
            if (std::find(result.elements.begin(), result.elements.end(), e) ==
                result.elements.end())
                result.elements.push_back(e);
        result.pairs.push_back(std::move(block));
    }
    return result;
}

bool is_residually_p_segment(const Int &k, const Int &l, const Int &p)
{
    NpSegmentData d = np_segment_data(k, l, p);
    return d.k1 == 1 && d.l1 == 1;
}

AbelianInvariants BasisChange::invariants() const
{
    AbelianInvariants inv;
    inv.free_rank = 1;
    if (d > 1)
        inv.torsion.push_back(d);
    return inv;
}

BasisChange abelianize_segment(const Int &k, const Int &l)
{
    if (k < 1 || l < 1)
        throw std::domain_error("abelianize_segment: exponents must be positive");
    ExtGcd e = ext_gcd(k, l);
    BasisChange bc;
    bc.d = e.g;
    bc.x = e.x;
    bc.y = e.y;
    bc.k_over_d = k / e.g;
    bc.l_over_d = l / e.g;
    // det ((k/d, -l/d), (y, x)) = (x k + y l)/d = 1
    if (bc.k_over_d * bc.x + bc.l_over_d * bc.y != 1)
        throw std::logic_error("abelianize_segment: basis change is not unimodular");
    return bc;
}

IntMatrix np_quotient_matrix(const LabeledTree &tree, const Int &p)
{
    tree.validate();
    if (!tree.normalized())
        throw std::domain_error("np_quotient_matrix: tree labels must be positive");
    auto pairs = vertex_pairs(tree);
    IntMatrix m(pairs.size(), tree.vertices.size());
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        auto [i, j] = pairs[r];
        PathRelation rel = path_relation(tree, i, j);
        NpSegmentData d = np_segment_data(rel.source_exp, rel.target_exp, p);
        m.at(r, i) = rel.source_exp / d.d1;
        m.at(r, j) = -rel.target_exp / d.d1;
    }
    return m;
}

CentralSubgroupData np_central_subgroup_matrix(const LabeledTree &tree, const Int &p)
{
    IntMatrix q = np_quotient_matrix(tree, p);
    std::size_t n = tree.vertices.size();

    CentralSubgroupData data;
    data.m.assign(n, 0);
    for (std::size_t r = 0; r < q.rows; ++r)
        for (std::size_t j = 0; j < n; ++j)
            if (q.at(r, j) != 0)
                data.m[j] = std::max(data.m[j], valuation(q.at(r, j), p));

    // Raise each pair relation x_u^A = x_v^B to the least power c making both
    // sides powers of the subgroup generators y_w = x_w^{p^{M_w}}.
    data.rows = IntMatrix(q.rows, n);
    for (std::size_t r = 0; r < q.rows; ++r) {
        Int c = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (q.at(r, j) != 0) {
                Int pm = pow(p, data.m[j]);
                c = lcm(c, pm / gcd(q.at(r, j), pm));
            }
        for (std::size_t j = 0; j < n; ++j)
            if (q.at(r, j) != 0)
                data.rows.at(r, j) = q.at(r, j) * c / pow(p, data.m[j]);
    }
    return data;
}

} // namespace gbs

#include "gbs/center.hpp"

#include <stdexcept>

#include "gbs/arith.hpp"

namespace gbs {

CenterData center_exponents(const LabeledTree &tree)
{
    tree.validate();
    std::size_t n = tree.vertices.size();
    if (n == 1)
        return {{Int(1)}, true};
    if (!tree.normalized())
        throw std::domain_error("center_exponents: tree labels must be positive");

    // r_v is the least positive exponent with x_v^{r_v} in every other vertex
    // group: the lcm of the source exponents of the path relations from v.
    CenterData data;
    data.exponents.resize(n, 1);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            if (u != v)
                data.exponents[v] = lcm(data.exponents[v], path_relation(tree, v, u).source_exp);

    for (const LabeledTree::Edge &e : tree.edges)
        if (data.exponents[e.u] * e.label_v != data.exponents[e.v] * e.label_u)
            throw std::logic_error("center_exponents: cross-consistency failed");
    return data;
}

std::vector<Int> modulus_hom(const LabeledTree &tree)
{
    CenterData data = center_exponents(tree);
    Int r = 1;
    for (const Int &rv : data.exponents)
        r = lcm(r, rv);
    std::vector<Int> images;
    images.reserve(data.exponents.size());
    for (const Int &rv : data.exponents)
        images.push_back(r / rv);
    for (const LabeledTree::Edge &e : tree.edges)
        if (e.label_u * images[e.u] != e.label_v * images[e.v])
            throw std::logic_error("modulus_hom: edge relation not preserved");
    return images;
}

FiniteCyclicTree quotient_by_center(const LabeledTree &tree)
{
    FiniteCyclicTree fct{tree, center_exponents(tree).exponents};
    for (const LabeledTree::Edge &e : tree.edges)
        if (!divides(e.label_u, fct.orders[e.u]) || !divides(e.label_v, fct.orders[e.v]))
            throw std::logic_error("quotient_by_center: edge subgroup not well-defined");
    return fct;
}

std::size_t center_of_p_tree(const FiniteCyclicTree &fct, const Int &p)
{
    const LabeledTree &tree = fct.tree;
    tree.validate();
    if (!is_prime(p))
        throw std::domain_error("center_of_p_tree: p must be prime");
    if (tree.edges.empty())
        throw std::domain_error("center_of_p_tree: tree has no edges");

    auto p_power = [&](const Int &x) {
        if (x < 1)
            return false;
        Int m = x;
        while (divides(p, m))
            m /= p;
        return m == 1;
    };
    for (std::size_t v = 0; v < tree.vertices.size(); ++v)
        if (!p_power(fct.orders[v]))
            throw std::domain_error("center_of_p_tree: order of '" + tree.vertices[v] +
                                    "' is not a power of p");
    for (const LabeledTree::Edge &e : tree.edges) {
        if (!p_power(e.label_u) || !p_power(e.label_v))
            throw std::domain_error("center_of_p_tree: edge label is not a power of p");
        if (!divides(e.label_u, fct.orders[e.u]) || !divides(e.label_v, fct.orders[e.v]))
            throw std::domain_error("center_of_p_tree: edge label does not divide its vertex order");
    }

    // Incremental intersection over BFS edges. The candidate central subgroup
    // is <x_v^{m_v}> for every processed vertex v; at each new edge the two
    // subgroups of the attachment vertex group are comparable (cyclic p-group),
    // so either the candidate passes across the edge or shrinks to it.
    auto adj = tree.adjacency();
    std::vector<Int> m(tree.vertices.size(), 0);
    std::vector<char> vis(tree.vertices.size(), 0);
    std::size_t candidate = SIZE_MAX;

    std::vector<std::size_t> queue{0};
    vis[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::size_t a = queue[qi];
        for (auto [b, ei] : adj[a]) {
            if (vis[b])
                continue;
            vis[b] = 1;
            queue.push_back(b);
            const LabeledTree::Edge &e = tree.edges[ei];
            const Int &kap = e.u == a ? e.label_u : e.label_v; // a-side
            const Int &nu = e.u == a ? e.label_v : e.label_u;  // b-side
            if (candidate == SIZE_MAX) {
                candidate = ei;
                m[a] = kap;
                m[b] = nu;
                continue;
            }
            if (divides(kap, m[a])) {
                // candidate subgroup <x_a^{m_a}> <= <x_a^{kap}>: carry across
                m[b] = nu * (m[a] / kap);
            } else {
                // edge group is the smaller one: rescale and shrink
                Int factor = kap / m[a];
                for (std::size_t w : queue)
                    if (m[w] != 0)
                        m[w] *= factor;
                m[b] = nu;
                candidate = ei;
            }
        }
    }
    return candidate;
}

} // namespace gbs

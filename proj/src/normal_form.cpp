#include <algorithm>

#include "gbs/tree.hpp"
#include "gbs/words.hpp"

// Word problem for the tree amalgam, via the reduced-word normal form of the
// fundamental group of the tree of groups. A word is rewritten as a closed
// path at the root (first declared vertex) carrying one exponent per visited
// vertex; backtracks whose middle exponent lies in the edge subgroup are
// pinched (transported across the edge), then a right-to-left sweep puts
// every non-head exponent into its coset-representative range [0, label).
// Carries add multiples of the pinch modulus, so one sweep after the pinch
// fixpoint is canonical: two words are equal in the group iff the surviving
// nonzero syllables coincide.

namespace gbs {

namespace {

struct PathEntry {
    std::size_t v;
    Int e;
};

struct TreeNav {
    const LabeledTree &tree;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;
    std::vector<std::size_t> parent, parent_edge, depth;
    // edge index by unordered vertex pair, flat |V|^2 table
    std::vector<std::size_t> edge_at;

    explicit TreeNav(const LabeledTree &t) : tree(t), adj(t.adjacency())
    {
        std::size_t n = tree.vertices.size();
        parent.assign(n, SIZE_MAX);
        parent_edge.assign(n, SIZE_MAX);
        depth.assign(n, 0);
        edge_at.assign(n * n, SIZE_MAX);
        for (std::size_t i = 0; i < tree.edges.size(); ++i) {
            edge_at[tree.edges[i].u * n + tree.edges[i].v] = i;
            edge_at[tree.edges[i].v * n + tree.edges[i].u] = i;
        }
        std::vector<std::size_t> queue{0};
        parent[0] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (auto [w, ei] : adj[queue[qi]])
                if (parent[w] == SIZE_MAX) {
                    parent[w] = queue[qi];
                    parent_edge[w] = ei;
                    depth[w] = depth[queue[qi]] + 1;
                    queue.push_back(w);
                }
    }

    std::size_t edge_between(std::size_t a, std::size_t b) const
    {
        return edge_at[a * tree.vertices.size() + b];
    }

    // label on the `side` endpoint of the edge between a and b
    const Int &label_at(std::size_t a, std::size_t b, std::size_t side) const
    {
        const LabeledTree::Edge &e = tree.edges[edge_between(a, b)];
        return e.u == side ? e.label_u : e.label_v;
    }

    // vertices strictly after `from` on the geodesic to `to`, inclusive
    std::vector<std::size_t> geodesic(std::size_t from, std::size_t to) const
    {
        std::vector<std::size_t> up, down;
        std::size_t a = from, b = to;
        while (depth[a] > depth[b]) {
            a = parent[a];
            up.push_back(a);
        }
        while (depth[b] > depth[a]) {
            down.push_back(b);
            b = parent[b];
        }
        while (a != b) {
            a = parent[a];
            up.push_back(a);
            down.push_back(b);
            b = parent[b];
        }
        up.insert(up.end(), down.rbegin(), down.rend());
        return up;
    }
};

} // namespace

GroupWord normal_form(const LabeledTree &tree, const GroupWord &input)
{
    if (!tree.normalized())
        throw std::domain_error("normal_form: tree labels must be positive (normalize first)");
    TreeNav nav(tree);

    // closed path at the root, exponents at each visited vertex
    std::vector<PathEntry> path;
    path.push_back({0, 0});
    std::size_t at = 0;
    auto walk_to = [&](std::size_t target) {
        for (std::size_t w : nav.geodesic(at, target))
            path.push_back({w, 0});
        at = target;
    };
    for (const Syllable &s : input.syllables) {
        walk_to(tree.index_of(s.gen));
        path.back().e += s.exp;
    }
    walk_to(0);

    // pinch backtracks whose middle exponent lies in the edge subgroup
    std::size_t i = 1;
    while (i + 1 < path.size()) {
        if (path[i - 1].v == path[i + 1].v) {
            const Int &nu = nav.label_at(path[i - 1].v, path[i].v, path[i].v);
            const Int &mu = nav.label_at(path[i - 1].v, path[i].v, path[i - 1].v);
            if (divides(nu, path[i].e)) {
                path[i - 1].e += mu * (path[i].e / nu) + path[i + 1].e;
                path.erase(path.begin() + i, path.begin() + i + 2);
                i = i >= 2 ? i - 1 : 1;
                continue;
            }
        }
        ++i;
    }

    // coset-representative sweep; carries flow toward the head
    for (std::size_t j = path.size() - 1; j >= 1; --j) {
        const Int &nu = nav.label_at(path[j - 1].v, path[j].v, path[j].v);
        const Int &mu = nav.label_at(path[j - 1].v, path[j].v, path[j - 1].v);
        Int q = fdiv_q(path[j].e, nu);
        if (q != 0) {
            path[j].e -= q * nu;
            path[j - 1].e += mu * q;
        }
    }

    GroupWord out;
    for (const PathEntry &p : path)
        if (p.e != 0)
            out.syllables.push_back({tree.vertices[p.v], p.e});
    return out;
}

bool is_trivial(const LabeledTree &tree, const GroupWord &w)
{
    return normal_form(tree, w).empty();
}

} // namespace gbs

#include "gbs/tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gbs {

std::size_t LabeledTree::index_of(const std::string &name) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name)
            return i;
    throw std::domain_error("unknown vertex '" + name + "'");
}

bool LabeledTree::has_vertex(const std::string &name) const
{
    return std::find(vertices.begin(), vertices.end(), name) != vertices.end();
}

bool LabeledTree::normalized() const
{
    for (const Edge &e : edges)
        if (e.label_u <= 0 || e.label_v <= 0)
            return false;
    return true;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> LabeledTree::adjacency() const
{
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vertices.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        adj[edges[i].u].push_back({edges[i].v, i});
        adj[edges[i].v].push_back({edges[i].u, i});
    }
    return adj;
}

void LabeledTree::validate() const
{
    if (vertices.empty())
        throw std::domain_error("tree has no vertices");
    std::map<std::string, int> seen;
    for (const std::string &v : vertices)
        if (++seen[v] > 1)
            throw std::domain_error("duplicate vertex '" + v + "'");
    if (edges.size() != vertices.size() - 1)
        throw std::domain_error("edge set does not form a tree");
    for (const Edge &e : edges) {
        if (e.u >= vertices.size() || e.v >= vertices.size())
            throw std::domain_error("edge references an unknown vertex");
        if (e.u == e.v)
            throw std::domain_error("self-loop at '" + vertices[e.u] + "'");
        if (e.label_u == 0 || e.label_v == 0)
            throw std::domain_error("zero edge label");
    }
    // connectivity; with |E| = |V|-1 this also excludes cycles
    std::vector<char> vis(vertices.size(), 0);
    std::vector<std::size_t> stack{0};
    vis[0] = 1;
    auto adj = adjacency();
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (auto [w, ei] : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                stack.push_back(w);
            }
    }
    if (std::find(vis.begin(), vis.end(), 0) != vis.end())
        throw std::domain_error("edge set does not form a tree (disconnected)");
}

namespace {

std::vector<std::string> split_ws(const std::string &line)
{
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

} // namespace

LabeledTree parse_tree(const std::string &text)
{
    LabeledTree tree;
    std::map<std::string, std::size_t> index;

    // union-find for early cycle diagnostics with a line number
    std::vector<std::size_t> parent;
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto tok = split_ws(line);
        if (tok.empty())
            continue;
        if (tok[0] == "vertex") {
            if (tok.size() != 2)
                throw parse_error(lineno, "syntax error: expected 'vertex NAME'");
            if (index.count(tok[1]))
                throw parse_error(lineno, "duplicate vertex '" + tok[1] + "'");
            index[tok[1]] = tree.vertices.size();
            tree.vertices.push_back(tok[1]);
            parent.push_back(parent.size());
        } else if (tok[0] == "edge") {
            if (tok.size() != 5)
                throw parse_error(lineno, "syntax error: expected 'edge NAME1 NAME2 INT INT'");
            for (int s = 1; s <= 2; ++s)
                if (!index.count(tok[s]))
                    throw parse_error(lineno, "unknown vertex '" + tok[s] + "'");
            std::size_t u = index[tok[1]], v = index[tok[2]];
            Int lu, lv;
            try {
                lu = parse_int(tok[3]);
                lv = parse_int(tok[4]);
            } catch (const std::domain_error &e) {
                throw parse_error(lineno, std::string("syntax error: ") + e.what());
            }
            if (lu == 0 || lv == 0)
                throw parse_error(lineno, "zero label on edge " + tok[1] + " " + tok[2]);
            if (u == v)
                throw parse_error(lineno, "non-tree edge set: self-loop at '" + tok[1] + "'");
            if (find(u) == find(v))
                throw parse_error(lineno, "non-tree edge set: edge closes a cycle");
            parent[find(u)] = find(v);
            tree.edges.push_back({u, v, lu, lv});
        } else {
            throw parse_error(lineno, "syntax error: unknown directive '" + tok[0] + "'");
        }
    }
    if (tree.vertices.empty())
        throw parse_error(lineno, "no vertices declared");
    if (tree.edges.size() != tree.vertices.size() - 1)
        throw parse_error(lineno, "non-tree edge set: graph is disconnected");
    tree.validate();
    return tree;
}

LabeledTree normalize_signs(const LabeledTree &input)
{
    input.validate();
    LabeledTree tree = input;
    auto adj = tree.adjacency();

    auto vertex_flip = [&](std::size_t v) {
        for (auto [w, ei] : adj[v]) {
            LabeledTree::Edge &e = tree.edges[ei];
            (e.u == v ? e.label_u : e.label_v) *= -1;
        }
    };

    // BFS from the first declared vertex; each edge is fixed when reached
    // from its parent side, and a child-vertex flip only touches edges that
    // have not been processed yet.
    std::vector<char> vis(tree.vertices.size(), 0);
    std::vector<std::size_t> queue{0};
    vis[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::size_t v = queue[qi];
        for (auto [w, ei] : adj[v]) {
            if (vis[w])
                continue;
            vis[w] = 1;
            LabeledTree::Edge &e = tree.edges[ei];
            Int &near = e.u == v ? e.label_u : e.label_v;
            Int &far = e.u == v ? e.label_v : e.label_u;
            if (near < 0) { // edge flip
                near *= -1;
                far *= -1;
            }
            if (far < 0)
                vertex_flip(w);
            queue.push_back(w);
        }
    }
    return tree;
}

PathRelation path_relation(const LabeledTree &tree, std::size_t u, std::size_t v)
{
    if (u >= tree.vertices.size() || v >= tree.vertices.size())
        throw std::domain_error("unknown vertex index");
    if (u == v)
        throw std::domain_error("path_relation: endpoints coincide");
    if (!tree.normalized())
        throw std::domain_error("path_relation: tree labels must be positive (normalize first)");

    // BFS parents from u
    auto adj = tree.adjacency();
    std::vector<std::size_t> par(tree.vertices.size(), SIZE_MAX);
    std::vector<std::size_t> par_edge(tree.vertices.size(), SIZE_MAX);
    std::vector<std::size_t> queue{u};
    par[u] = u;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (auto [w, ei] : adj[queue[qi]])
            if (par[w] == SIZE_MAX) {
                par[w] = queue[qi];
                par_edge[w] = ei;
                queue.push_back(w);
            }

    std::vector<std::size_t> path_edges; // v back to u
    for (std::size_t w = v; w != u; w = par[w])
        path_edges.push_back(par_edge[w]);
    std::reverse(path_edges.begin(), path_edges.end());

    Int K, L;
    std::size_t at = u;
    for (std::size_t ei : path_edges) {
        const LabeledTree::Edge &e = tree.edges[ei];
        Int n = e.u == at ? e.label_u : e.label_v; // near side
        Int m = e.u == at ? e.label_v : e.label_u; // far side
        if (at == u) {
            K = n;
            L = m;
        } else {
            Int c = lcm(L, n);
            K *= c / L;
            L = m * (c / n);
        }
        at = e.u == at ? e.v : e.u;
    }
    return {u, v, K, L};
}

PathRelation path_relation(const LabeledTree &tree, const std::string &u, const std::string &v)
{
    return path_relation(tree, tree.index_of(u), tree.index_of(v));
}

Presentation standard_presentation(const LabeledTree &tree)
{
    Presentation pres;
    pres.generators = tree.vertices;
    for (const LabeledTree::Edge &e : tree.edges) {
        GroupWord w;
        w.syllables = {{tree.vertices[e.u], e.label_u}, {tree.vertices[e.v], -e.label_v}};
        pres.relators.push_back(free_reduce(w));
    }
    return pres;
}

std::vector<std::pair<std::size_t, std::size_t>> vertex_pairs(const LabeledTree &tree)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < tree.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < tree.vertices.size(); ++j)
            out.push_back({i, j});
    return out;
}

} // namespace gbs

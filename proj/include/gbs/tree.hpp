#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gbs/ints.hpp"
#include "gbs/words.hpp"

namespace gbs {

struct parse_error : std::runtime_error {
    int line;

    parse_error(int line_, const std::string &msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_)
    {
    }
};

// Labeled tree presenting a GBS tree group: one infinite-cyclic generator x_v
// per vertex, one relation x_u^{label_u} = x_v^{label_v} per edge.
struct LabeledTree {
    struct Edge {
        std::size_t u, v;
        Int label_u, label_v;

        bool operator==(const Edge &) const = default;
    };

    std::vector<std::string> vertices; // declaration order
    std::vector<Edge> edges;

    std::size_t index_of(const std::string &name) const; // throws std::domain_error
    bool has_vertex(const std::string &name) const;
    bool normalized() const; // all labels strictly positive

    // (neighbor, edge index) lists in edge declaration order.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency() const;

    void validate() const; // unique names, nonzero labels, tree shape
};

// x_source^{source_exp} = x_target^{target_exp}, exponents unreduced:
// the subgroup <x_source, x_target> has this as its defining relation.
struct PathRelation {
    std::size_t source, target;
    Int source_exp, target_exp;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<GroupWord> relators;
};

// .gbs format: '# comment', 'vertex NAME', 'edge NAME1 NAME2 INT1 INT2'
// (read as x_NAME1^INT1 = x_NAME2^INT2); blank lines ignored.
LabeledTree parse_tree(const std::string &text);

// Admissible sign changes (vertex flips and edge flips) until every label is
// positive; the result presents an isomorphic group. Deterministic: edges are
// processed in BFS order from the first declared vertex.
LabeledTree normalize_signs(const LabeledTree &tree);

// Fold the edge relations along the unique u-v path. Requires positive labels
// and u != v.
PathRelation path_relation(const LabeledTree &tree, std::size_t u, std::size_t v);
PathRelation path_relation(const LabeledTree &tree, const std::string &u, const std::string &v);

Presentation standard_presentation(const LabeledTree &tree);

// Unordered vertex pairs (i < j) in declaration order.
std::vector<std::pair<std::size_t, std::size_t>> vertex_pairs(const LabeledTree &tree);

} // namespace gbs

#include "gbs/notes.hpp"

#include <array>

namespace gbs {

namespace {

// Recognize the five-vertex tree with edge relations
//   a^42 = b^30, b^14 = c^3, b^21 = d^12, c^10 = e^15
// up to vertex naming. Its folded a-c relation is a frequent source of copy
// errors: a^294 = c^45 is forced by the edge relations, but the pair is often
// quoted with 30 in place of 45.
bool match_worked_example(const LabeledTree &tree, std::size_t &a, std::size_t &c)
{
    if (tree.vertices.size() != 5 || tree.edges.size() != 4)
        return false;

    auto edge_with = [&](std::size_t u, const Int &lu, const Int &lv, std::size_t &other) {
        for (const LabeledTree::Edge &e : tree.edges) {
            if (e.u == u && e.label_u == lu && e.label_v == lv) {
                other = e.v;
                return true;
            }
            if (e.v == u && e.label_v == lu && e.label_u == lv) {
                other = e.u;
                return true;
            }
        }
        return false;
    };

    for (std::size_t b = 0; b < 5; ++b) {
        std::size_t d = 0, e = 0;
        if (edge_with(b, 30, 42, a) && edge_with(b, 14, 3, c) && edge_with(b, 21, 12, d) &&
            edge_with(c, 10, 15, e)) {
            std::array<std::size_t, 5> all{a, b, c, d, e};
            bool distinct = true;
            for (std::size_t i = 0; i < 5 && distinct; ++i)
                for (std::size_t j = i + 1; j < 5; ++j)
                    if (all[i] == all[j]) {
                        distinct = false;
                        break;
                    }
            if (distinct)
                return true;
        }
    }
    return false;
}

} // namespace

std::vector<std::string> advisory_notes(const LabeledTree &tree)
{
    std::vector<std::string> notes;
    if (!tree.normalized())
        return notes;
    std::size_t a = 0, c = 0;
    if (match_worked_example(tree, a, c)) {
        const std::string &an = tree.vertices[a];
        const std::string &cn = tree.vertices[c];
        notes.push_back("erratum: the pair (" + an + ", " + cn + ") folds to " + an + "^294 = " +
                        cn + "^45; a published listing of this example gives " + cn +
                        "^30, which is inconsistent with the edge relations (and with the "
                        "derived generating sets, which require 45)");
    }
    return notes;
}

} // namespace gbs

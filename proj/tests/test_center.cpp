#include <doctest.h>

#include "gbs/center.hpp"
#include "gbs/words.hpp"
#include "test_util.hpp"

using namespace gbs;

TEST_CASE("center exponents of the worked example")
{
    CenterData cd = center_exponents(example_tree());
    CHECK(cd.exponents == std::vector<Int>{588, 420, 90, 240, 135});
    CHECK(!cd.whole_group);
}

TEST_CASE("center exponents of segments")
{
    CenterData cd = center_exponents(segment(42, 30));
    CHECK(cd.exponents == std::vector<Int>{42, 30});

    cd = center_exponents(segment(1, 1));
    CHECK(cd.exponents == std::vector<Int>{1, 1});

    LabeledTree single;
    single.vertices = {"a"};
    cd = center_exponents(single);
    CHECK(cd.whole_group);
    CHECK(cd.exponents == std::vector<Int>{1});
}

TEST_CASE("segment center exponents are minimal (word problem search)")
{
    // (r_a, r_b) = (42, 30): the only pairs (i, j) in the box with
    // x_a^i = x_b^j are the multiples of (42, 30)
    LabeledTree t = segment(42, 30);
    for (long i = 1; i <= 42; ++i)
        for (long j = 1; j <= 30; ++j) {
            GroupWord w;
            w.syllables = {{"a", i}, {"b", -j}};
            bool expected = (i == 42 && j == 30);
            CHECK(is_trivial(t, w) == expected);
        }
}

TEST_CASE("modulus homomorphism")
{
    std::vector<Int> images = modulus_hom(example_tree());
    CHECK(images == std::vector<Int>{180, 252, 1176, 441, 784});
    // r = lcm of the center exponents
    CHECK(images[0] * 588 == 105840);

    CHECK(modulus_hom(segment(42, 30)) == std::vector<Int>{5, 7});
    CHECK(modulus_hom(segment(1, 1)) == std::vector<Int>{1, 1});
}

TEST_CASE("quotient_by_center")
{
    FiniteCyclicTree fct = quotient_by_center(example_tree());
    CHECK(fct.orders == std::vector<Int>{588, 420, 90, 240, 135});

    fct = quotient_by_center(segment(42, 30));
    CHECK(fct.orders == std::vector<Int>{42, 30});

    fct = quotient_by_center(segment(1, 1));
    CHECK(fct.orders == std::vector<Int>{1, 1});
}

namespace {

FiniteCyclicTree p_chain(const std::vector<Int> &orders,
                         const std::vector<std::pair<Int, Int>> &labels)
{
    FiniteCyclicTree fct;
    for (std::size_t v = 0; v < orders.size(); ++v)
        fct.tree.vertices.push_back("v" + std::to_string(v));
    for (std::size_t e = 0; e < labels.size(); ++e)
        fct.tree.edges.push_back({e, e + 1, labels[e].first, labels[e].second});
    fct.orders = orders;
    return fct;
}

} // namespace

TEST_CASE("center_of_p_tree")
{
    // x^4 = y^4, y^2 = z^2 over Z_8: <y^4> <= <y^2>, center is the first edge
    FiniteCyclicTree fct = p_chain({8, 8, 8}, {{4, 4}, {2, 2}});
    CHECK(center_of_p_tree(fct, 2) == 0);

    // two-vertex tree: the only edge
    fct = p_chain({8, 4}, {{2, 2}});
    CHECK(center_of_p_tree(fct, 2) == 0);

    // x^2 = y^2 over Z_8-Z_8, extended by y^4 = z^4: <y^4> < <y^2>,
    // so the center is the smaller edge group, the y-z edge
    fct = p_chain({8, 8, 8}, {{2, 2}, {4, 4}});
    CHECK(center_of_p_tree(fct, 2) == 1);

    // the center edge group is contained in every edge group, measured by
    // subgroup order at the endpoints
    std::size_t ei = center_of_p_tree(fct, 2);
    const LabeledTree::Edge &ce = fct.tree.edges[ei];
    Int center_order = fct.orders[ce.u] / ce.label_u;
    for (const LabeledTree::Edge &e : fct.tree.edges)
        CHECK(divides(center_order, fct.orders[e.u] / e.label_u));

    // domain errors
    FiniteCyclicTree bad = p_chain({8, 6}, {{2, 2}});
    CHECK_THROWS_AS(center_of_p_tree(bad, 2), std::domain_error);
    bad = p_chain({8, 8}, {{3, 2}});
    CHECK_THROWS_AS(center_of_p_tree(bad, 2), std::domain_error);
    CHECK_THROWS_AS(center_of_p_tree(p_chain({8, 8}, {{2, 2}}), 4), std::domain_error);
}

TEST_CASE("cross-consistency holds on every edge")
{
    LabeledTree t = example_tree();
    CenterData cd = center_exponents(t);
    for (const LabeledTree::Edge &e : t.edges)
        CHECK(cd.exponents[e.u] * e.label_v == cd.exponents[e.v] * e.label_u);
}

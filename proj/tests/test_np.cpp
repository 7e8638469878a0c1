#include <doctest.h>

#include "gbs/center.hpp"
#include "gbs/np.hpp"
#include "gbs/oracle.hpp"
#include "test_util.hpp"

using namespace gbs;

namespace {

SetElement pw(const char *u, long a, const char *v, long b)
{
    return {SetElement::Kind::power_word, u, a, v, b};
}

SetElement cm(const char *u, long a, const char *v, long b)
{
    return {SetElement::Kind::commutator, u, a, v, b};
}

} // namespace

TEST_CASE("np_segment_data")
{
    NpSegmentData d = np_segment_data(42, 30, 3);
    CHECK(d.kappa == 1);
    CHECK(d.lambda == 1);
    CHECK(d.k1 == 14);
    CHECK(d.l1 == 10);
    CHECK(d.d1 == 2);

    d = np_segment_data(140, 45, 3);
    CHECK(d.kappa == 0);
    CHECK(d.lambda == 2);
    CHECK(d.d1 == 5);

    CHECK_THROWS_AS(np_segment_data(42, 30, 4), std::domain_error);
}

TEST_CASE("np_segment_set fixtures")
{
    CHECK(np_segment_set(42, 30, 3) ==
          ElementSet{pw("a", 21, "b", 15), cm("a", 1, "b", 3), cm("a", 3, "b", 1)});

    // kappa = 0 collapses both commutators to [a, b]
    CHECK(np_segment_set(140, 45, 3) == ElementSet{pw("a", 28, "b", 9), cm("a", 1, "b", 1)});

    // d1 = 1 drops the power word
    CHECK(np_segment_set(294, 45, 3) == ElementSet{cm("a", 1, "b", 9), cm("a", 3, "b", 1)});

    // prime-power labels: everything filters away
    CHECK(np_segment_set(9, 27, 3).empty());
    CHECK(np_segment_set(8, 2, 2).empty());

    // p = 5 on (42, 30): kappa = 0, lambda = 1, d1 = gcd(42, 6) = 6
    CHECK(np_segment_set(42, 30, 5) == ElementSet{pw("a", 7, "b", 5), cm("a", 1, "b", 1)});
}

TEST_CASE("np elements for p = 5 die in 5-group images")
{
    LabeledTree t = segment(42, 30);
    for (const SetElement &e : np_segment_set(42, 30, 5))
        CHECK(annihilation_check_p(t, e.word(), 5, 25).annihilated);
}

TEST_CASE("np_omega_tree reproduces the ten worked-example sets")
{
    NpTreeResult res = np_omega_tree(example_tree(), 3);
    REQUIRE(res.pairs.size() == 10);

    std::vector<ElementSet> expected{
        {pw("alpha", 21, "beta", 15), cm("alpha", 1, "beta", 3), cm("alpha", 3, "beta", 1)},
        {cm("alpha", 1, "gamma", 9), cm("alpha", 3, "gamma", 1)},
        {pw("alpha", 147, "delta", 60), cm("alpha", 1, "delta", 3), cm("alpha", 3, "delta", 1)},
        {cm("alpha", 1, "epsilon", 27), cm("alpha", 3, "epsilon", 1)},
        {cm("beta", 1, "gamma", 1)},
        {cm("beta", 1, "delta", 3), cm("beta", 3, "delta", 1)},
        {pw("beta", 28, "epsilon", 9), cm("beta", 1, "epsilon", 1)},
        {cm("gamma", 1, "delta", 3), cm("gamma", 9, "delta", 1)},
        {pw("gamma", 2, "epsilon", 3), cm("gamma", 1, "epsilon", 1)},
        {pw("delta", 48, "epsilon", 27), cm("delta", 1, "epsilon", 27),
         cm("delta", 3, "epsilon", 1)},
    };
    for (std::size_t i = 0; i < 10; ++i) {
        CAPTURE(i);
        CHECK(res.pairs[i].elements == expected[i]);
    }
}

TEST_CASE("np_omega_tree on prime-power segments is empty")
{
    NpTreeResult res = np_omega_tree(segment(9, 27), 3);
    CHECK(res.elements.empty());
    CHECK(!res.pairs[0].dropped.empty());
}

TEST_CASE("power words vanish under the modulus homomorphism")
{
    LabeledTree t = example_tree();
    std::vector<Int> images = modulus_hom(t);
    NpTreeResult res = np_omega_tree(t, 3);
    for (const SetElement &e : res.elements) {
        if (e.kind != SetElement::Kind::power_word)
            continue;
        Int total = e.a * images[t.index_of(e.u)] - e.b * images[t.index_of(e.v)];
        CHECK(total == 0);
    }
}

TEST_CASE("is_residually_p_segment")
{
    CHECK(is_residually_p_segment(4, 8, 2));
    CHECK(!is_residually_p_segment(42, 30, 3));
    CHECK(is_residually_p_segment(1, 1, 5));
    CHECK(!is_residually_p_segment(4, 8, 3));
}

TEST_CASE("np sets empty iff residually p (small sweep)")
{
    for (long p : {2, 3, 5, 7})
        for (long k = 1; k <= 81; ++k)
            for (long l = 1; l <= 81; l += 5) {
                bool respg = is_residually_p_segment(k, l, p);
                bool empty = np_segment_set(k, l, p).empty();
                CAPTURE(k);
                CAPTURE(l);
                CAPTURE(p);
                if (respg)
                    CHECK(empty);
            }
}

TEST_CASE("abelianize_segment")
{
    BasisChange bc = abelianize_segment(42, 30);
    CHECK(bc.d == 6);
    CHECK(bc.invariants() == AbelianInvariants{{6}, 1});
    CHECK(bc.x * 42 + bc.y * 30 == 6);
    CHECK(bc.k_over_d * bc.x + bc.l_over_d * bc.y == 1); // det = 1

    bc = abelianize_segment(2, 3);
    CHECK(bc.d == 1);
    CHECK(bc.invariants() == AbelianInvariants{{}, 1});

    bc = abelianize_segment(8, 32); // p^kappa with kappa <= lambda
    CHECK(bc.d == 8);
    CHECK(bc.invariants() == AbelianInvariants{{8}, 1});
}

TEST_CASE("basis change determinant is 1 for all small pairs")
{
    for (long k = 1; k <= 200; k += 3)
        for (long l = 1; l <= 200; l += 7) {
            BasisChange bc = abelianize_segment(k, l);
            CHECK(bc.k_over_d * bc.x + bc.l_over_d * bc.y == 1);
        }
}

TEST_CASE("np quotient matrix and central subgroup matrix match the fixtures")
{
    LabeledTree t = example_tree();
    IntMatrix a = np_quotient_matrix(t, 3);
    CHECK(a == parse_matrix(read_fixture("matrix_a.txt")));
    CHECK(invariants_of(a) == AbelianInvariants{{3, 3}, 1});
    CHECK(invariants_of(a).str() == "Z x Z_3 x Z_3");

    CentralSubgroupData cs = np_central_subgroup_matrix(t, 3);
    CHECK(cs.m == std::vector<unsigned long>{1, 1, 2, 1, 3});
    CHECK(cs.rows == parse_matrix(read_fixture("matrix_b.txt")));
    CHECK(invariants_of(cs.rows) == AbelianInvariants{{}, 1});
}

TEST_CASE("single-vertex tree is degenerate")
{
    LabeledTree single;
    single.vertices = {"a"};
    NpTreeResult res = np_omega_tree(single, 3);
    CHECK(res.degenerate);
    CHECK(res.elements.empty());
}

#include <doctest.h>

#include "gbs/oracle.hpp"
#include "gbs/words.hpp"
#include "test_util.hpp"

using namespace gbs;

TEST_CASE("catalog construction")
{
    auto cat = build_catalog(8, {2});
    REQUIRE(cat.size() == 7);
    CHECK(cat[0].tag == "Z2");
    CHECK(cat[1].tag == "Z4");
    CHECK(cat[2].tag == "Z2xZ2");
    CHECK(cat[3].tag == "Z8");
    CHECK(cat[4].tag == "Z4xZ2");
    CHECK(cat[5].tag == "Z2xZ2xZ2");
    CHECK(cat[6].tag == "UT3_mod2");
    for (const auto &g : cat)
        CHECK(g.nilpotency_class == (g.tag == "UT3_mod2" ? 2u : 1u));

    cat = build_catalog(3, {3});
    REQUIRE(cat.size() == 1);
    CHECK(cat[0].tag == "Z3");

    cat = build_catalog(27, {3});
    bool has_ut3 = false;
    for (const auto &g : cat)
        if (g.tag == "UT3_mod3") {
            has_ut3 = true;
            CHECK(g.order == 27);
            CHECK(g.nilpotency_class == 2);
        }
    CHECK(has_ut3);

    CHECK_THROWS_AS(build_catalog(1, {2}), std::domain_error);
    CHECK_THROWS_AS(build_catalog(8, {4}), std::domain_error);
}

TEST_CASE("enumerate_homs counts")
{
    // 30y = 42x is vacuous mod 6: all |Z_6|^2 assignments
    auto homs = enumerate_homs(segment(42, 30), FiniteGroupTable::abelian({6}));
    CHECK(homs.size() == 36);

    // 3y = 2x mod 2 forces y = 0, x free
    homs = enumerate_homs(segment(2, 3), FiniteGroupTable::abelian({2}));
    CHECK(homs.size() == 2);

    // the trivial group admits exactly one homomorphism
    homs = enumerate_homs(example_tree(), FiniteGroupTable::abelian({}));
    CHECK(homs.size() == 1);

    // completeness at small scale: matches raw brute force over all pairs
    FiniteGroupTable z6 = FiniteGroupTable::abelian({6});
    std::size_t brute = 0;
    LabeledTree seg = segment(2, 3);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
            if (z6.power(x, 2) == z6.power(y, 3))
                ++brute;
    CHECK(enumerate_homs(seg, z6).size() == brute);
}

TEST_CASE("homomorphisms preserve every edge relation")
{
    LabeledTree t = example_tree();
    for (const auto &target : build_catalog(9, {2, 3}))
        for (const Homomorphism &hom : enumerate_homs(t, target))
            for (const LabeledTree::Edge &e : t.edges)
                CHECK(target.power(hom.images[e.u], e.label_u) ==
                      target.power(hom.images[e.v], e.label_v));
}

TEST_CASE("annihilation_check")
{
    LabeledTree t = example_tree();
    auto catalog = build_catalog(27, {2, 3, 5, 7});
    CHECK(annihilation_check(t, parse_word("[alpha^147, beta^4]"), catalog).annihilated);

    // coprime labels: [a, b] lies in gamma_omega
    CHECK(annihilation_check(segment(2, 3), parse_word("[a, b]"), build_catalog(16, {2, 3}))
              .annihilated);

    // a generator survives in abelian quotients
    auto res = annihilation_check(segment(4, 8), parse_word("a"),
                                  {FiniteGroupTable::abelian({4})});
    CHECK(!res.annihilated);
    CHECK(res.witness_tag == "Z4");
    CHECK(res.witness.images[0] == 1);
    CHECK(res.witness_image == 1);

    CHECK_THROWS_AS(annihilation_check(t, parse_word("zeta"), catalog), std::domain_error);
}

TEST_CASE("annihilation_check_p")
{
    LabeledTree t = example_tree();
    CHECK(annihilation_check_p(t, parse_word("alpha^21 * beta^-15"), 3, 27).annihilated);
    CHECK(annihilation_check_p(segment(42, 30), parse_word("[a, b^3]"), 3, 27).annihilated);

    auto res = annihilation_check_p(segment(42, 30), parse_word("a"), 3, 27);
    CHECK(!res.annihilated);
    CHECK(res.witness_tag == "Z3");
}

TEST_CASE("coprime_commutator_check")
{
    CHECK(coprime_commutator_check(42, 30, 21, 10));  // kappa 2, lambda 3
    CHECK(!coprime_commutator_check(42, 30, 21, 15)); // kappa 2, lambda 2
    CHECK(!coprime_commutator_check(8, 8, 1, 1));     // kappa = lambda = 8
    CHECK_THROWS_AS(coprime_commutator_check(42, 30, 5, 10), std::domain_error);
    CHECK_THROWS_AS(coprime_commutator_check(42, 30, 21, 7), std::domain_error);
}

TEST_CASE("UT3 is a class-2 witness family")
{
    FiniteGroupTable ut3 = FiniteGroupTable::unitriangular3(2);
    CHECK(ut3.order == 8);
    CHECK(ut3.nilpotency_class == 2);
    // noncommuting pair exists
    bool noncomm = false;
    for (std::size_t x = 0; x < 8 && !noncomm; ++x)
        for (std::size_t y = 0; y < 8; ++y)
            if (ut3.at(int(x), int(y)) != ut3.at(int(y), int(x))) {
                noncomm = true;
                break;
            }
    CHECK(noncomm);
}

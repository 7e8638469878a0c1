#include <doctest.h>

#include <array>
#include <random>

#include "gbs/center.hpp"
#include "gbs/oracle.hpp"
#include "gbs/words.hpp"
#include "test_util.hpp"

using namespace gbs;

TEST_CASE("free_reduce")
{
    GroupWord w;
    w.syllables = {{"a", 3}, {"a", -3}};
    CHECK(free_reduce(w).empty());

    w.syllables = {{"a", 2}, {"b", 1}, {"b", -1}, {"a", 1}};
    GroupWord r = free_reduce(w);
    REQUIRE(r.syllables.size() == 1);
    CHECK(r.syllables[0] == Syllable{"a", 3});

    GroupWord reduced;
    reduced.syllables = {{"a", 2}, {"b", -1}};
    CHECK(free_reduce(reduced) == reduced);
}

TEST_CASE("parse_word round trips")
{
    GroupWord w = parse_word("a^3 * b^-2 * [a^2, b^3]");
    CHECK(to_string(w) == "a^3 * b^-2 * a^-2 * b^-3 * a^2 * b^3");
    CHECK(parse_word(to_string(w)) == w);
    CHECK(parse_word("a") == power_word("a", 1));
    CHECK(parse_word("a^21 b^-15") == parse_word("a^21 * b^-15"));
    CHECK_THROWS_AS(parse_word("a^"), std::domain_error);
    CHECK_THROWS_AS(parse_word("[a,"), std::domain_error);
    CHECK_THROWS_AS(parse_word("a *"), std::domain_error);
}

TEST_CASE("normal_form decides the word problem on a segment")
{
    LabeledTree t = segment(42, 30);

    // defining relator
    CHECK(is_trivial(t, parse_word("a^42 * b^-30")));
    // a^42 is central
    CHECK(is_trivial(t, parse_word("[a^42, b]")));
    // and b^30 is the same element
    CHECK(is_trivial(t, parse_word("a^42 * b^-15 * b^-15")));

    CHECK(!is_trivial(t, parse_word("a")));
    CHECK(!is_trivial(t, parse_word("[a^2, b^3]")));
    CHECK(!is_trivial(t, parse_word("a^21 * b^-15")));
}

TEST_CASE("[a^2, b^3] survives in a finite symmetric quotient")
{
    // independent witness that [a^2, b^3] != 1 in <a,b | a^42 = b^30>:
    // a -> (123), b -> (12) satisfies a^42 = b^30 = id, and the commutator
    // image is a 3-cycle. (Nilpotent images cannot see this element: it lies
    // in gamma_omega.)
    using Perm = std::array<int, 3>;
    auto compose = [](Perm f, Perm g) { // (f*g)(x) = f(g(x))
        return Perm{f[g[0]], f[g[1]], f[g[2]]};
    };
    auto power = [&](Perm f, int e) {
        Perm acc{0, 1, 2};
        for (int i = 0; i < e; ++i)
            acc = compose(acc, f);
        return acc;
    };
    auto invert = [](Perm f) {
        Perm g{};
        for (int i = 0; i < 3; ++i)
            g[f[i]] = i;
        return g;
    };
    Perm id{0, 1, 2};
    Perm a{1, 2, 0}; // (123)
    Perm b{1, 0, 2}; // (12)
    CHECK(power(a, 42) == id);
    CHECK(power(b, 30) == id);
    Perm a2 = power(a, 2), b3 = power(b, 3);
    Perm comm = compose(compose(invert(a2), invert(b3)), compose(a2, b3));
    CHECK(comm != id);
}

TEST_CASE("normal_form on segments with prime power labels")
{
    LabeledTree t = segment(8, 32); // a^8 = b^32, p = 2
    CHECK(is_trivial(t, parse_word("[a^8, b]")));
    CHECK(is_trivial(t, parse_word("[a, b^32]")));
    CHECK(!is_trivial(t, parse_word("[a, b^16]")));
}

TEST_CASE("normal_form kills every path relation word")
{
    LabeledTree t = example_tree();
    for (auto [i, j] : vertex_pairs(t)) {
        PathRelation rel = path_relation(t, i, j);
        GroupWord w;
        w.syllables = {{t.vertices[i], rel.source_exp}, {t.vertices[j], -rel.target_exp}};
        CAPTURE(i);
        CAPTURE(j);
        CHECK(is_trivial(t, w));
    }
    // and the center words x_u^{r_u} x_v^{-r_v}
    CenterData cd = center_exponents(t);
    for (auto [i, j] : vertex_pairs(t)) {
        GroupWord w;
        w.syllables = {{t.vertices[i], cd.exponents[i]}, {t.vertices[j], -cd.exponents[j]}};
        CHECK(is_trivial(t, w));
    }
}

namespace {

GroupWord random_word(std::mt19937 &rng, const LabeledTree &t, int max_syllables)
{
    GroupWord w;
    int n = int(rng() % (max_syllables + 1));
    for (int i = 0; i < n; ++i) {
        long e = long(rng() % 25) - 12;
        w.syllables.push_back({t.vertices[rng() % t.vertices.size()], e});
    }
    return free_reduce(w);
}

LabeledTree random_tree(std::mt19937 &rng)
{
    LabeledTree t;
    int nv = 1 + int(rng() % 5);
    for (int v = 0; v < nv; ++v)
        t.vertices.push_back("v" + std::to_string(v));
    for (int v = 1; v < nv; ++v)
        t.edges.push_back(
            {std::size_t(rng() % v), std::size_t(v), long(rng() % 12) + 1, long(rng() % 12) + 1});
    return t;
}

} // namespace

TEST_CASE("normal_form idempotence and soundness on random words")
{
    std::mt19937 rng(42);
    for (int round = 0; round < 25; ++round) {
        LabeledTree t = random_tree(rng);
        std::vector<Int> images = t.vertices.size() > 1 ? modulus_hom(t) : std::vector<Int>{1};
        for (int trial = 0; trial < 400; ++trial) {
            GroupWord u = random_word(rng, t, 8);
            GroupWord v = random_word(rng, t, 8);
            GroupWord nu = normal_form(t, u);
            CHECK(normal_form(t, nu) == nu);            // idempotent
            CHECK(normal_form(t, concat(u, u.inverse())).empty());
            GroupWord uv = concat(u, v);
            CHECK(normal_form(t, uv) == normal_form(t, concat(nu, normal_form(t, v))));
            if (normal_form(t, u).empty()) {
                // trivial words die under the modulus homomorphism
                Int total = 0;
                for (const Syllable &s : u.syllables)
                    total += s.exp * images[t.index_of(s.gen)];
                CHECK(total == 0);
            }
        }
    }
}

TEST_CASE("unknown vertex is a domain error")
{
    LabeledTree t = segment(2, 3);
    CHECK_THROWS_AS(normal_form(t, parse_word("q^2")), std::domain_error);
}

TEST_CASE("normal form preserves every finite image")
{
    // independent soundness oracle: w and nf(w) must agree under every
    // homomorphism into the catalog groups
    std::mt19937 rng(271828);
    for (int round = 0; round < 10; ++round) {
        LabeledTree t = random_tree(rng);
        auto catalog = build_catalog(9, {2, 3});
        std::vector<GroupWord> words;
        for (int i = 0; i < 40; ++i)
            words.push_back(random_word(rng, t, 6));
        for (const auto &target : catalog)
            for (const Homomorphism &hom : enumerate_homs(t, target)) {
                auto eval = [&](const GroupWord &w) {
                    int acc = 0;
                    for (const Syllable &s : w.syllables)
                        acc = target.at(acc, target.power(hom.images[t.index_of(s.gen)], s.exp));
                    return acc;
                };
                for (const GroupWord &w : words)
                    CHECK(eval(w) == eval(normal_form(t, w)));
            }
    }
}

TEST_CASE("products of conjugated relators reduce to the empty word")
{
    // completeness oracle: anything built from the defining relators is
    // trivial, however it is conjugated and shuffled
    std::mt19937 rng(314159);
    for (int round = 0; round < 30; ++round) {
        LabeledTree t = random_tree(rng);
        if (t.edges.empty())
            continue;
        std::vector<GroupWord> relators;
        for (const LabeledTree::Edge &e : t.edges) {
            GroupWord w;
            w.syllables = {{t.vertices[e.u], e.label_u}, {t.vertices[e.v], -e.label_v}};
            relators.push_back(w);
        }
        for (auto [i, j] : vertex_pairs(t)) {
            PathRelation rel = path_relation(t, i, j);
            GroupWord w;
            w.syllables = {{t.vertices[i], rel.source_exp}, {t.vertices[j], -rel.target_exp}};
            relators.push_back(w);
        }
        for (int trial = 0; trial < 40; ++trial) {
            GroupWord product;
            int factors = 1 + int(rng() % 4);
            for (int f = 0; f < factors; ++f) {
                GroupWord conj = random_word(rng, t, 4);
                GroupWord rel = relators[rng() % relators.size()];
                if (rng() % 2)
                    rel = rel.inverse();
                product = concat(product, concat(concat(conj, rel), conj.inverse()));
            }
            CHECK(is_trivial(t, product));
        }
    }
}

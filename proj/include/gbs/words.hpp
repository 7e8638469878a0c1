#pragma once

#include <string>
#include <vector>

#include "gbs/ints.hpp"

namespace gbs {

struct LabeledTree;

struct Syllable {
    std::string gen;
    Int exp;

    bool operator==(const Syllable &) const = default;
};

// Word in vertex-generator powers.
struct GroupWord {
    std::vector<Syllable> syllables;

    bool empty() const { return syllables.empty(); }
    GroupWord inverse() const;
    bool operator==(const GroupWord &) const = default;
};

GroupWord concat(const GroupWord &a, const GroupWord &b);
GroupWord power_word(const std::string &gen, const Int &exp);

// [x^a, y^b] stored with both exponents positive; orientation is
// canonicalized by the callers that know the generator order
// ([x,y]^-1 = [y,x] generates the same normal closure).
struct Commutator {
    std::string left_gen;
    Int left_exp;
    std::string right_gen;
    Int right_exp;

    GroupWord word() const; // x^-a y^-b x^a y^b

    bool operator==(const Commutator &) const = default;
};

// Merge adjacent same-generator syllables and drop zero exponents, to a fixpoint.
GroupWord free_reduce(const GroupWord &w);

// Canonical form for the tree amalgam: two words are equal in the group iff
// their normal forms are identical. The empty word is the identity.
GroupWord normal_form(const LabeledTree &tree, const GroupWord &w);

bool is_trivial(const LabeledTree &tree, const GroupWord &w);

// Mini-syntax: terms separated by '*' (or whitespace); a term is NAME,
// NAME^INT, or [NAME^INT, NAME^INT] which expands to the four-syllable
// commutator word. Throws std::domain_error on malformed input.
GroupWord parse_word(const std::string &text);

std::string to_string(const GroupWord &w);
std::string to_string(const Commutator &c);

} // namespace gbs

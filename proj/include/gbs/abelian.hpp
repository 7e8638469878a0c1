#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gbs/ints.hpp"
#include "gbs/tree.hpp"

namespace gbs {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a; // row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int &at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int &at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMatrix identity(std::size_t n);

    bool operator==(const IntMatrix &) const = default;
};

IntMatrix mul(const IntMatrix &x, const IntMatrix &y);

// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix &m);

// U * A * V = S with U, V unimodular; diagonal of S nonnegative, each entry
// dividing the next, zeros last. det_u/det_v are the tracked determinant
// signs of U and V.
struct SmithDecomposition {
    IntMatrix s, u, v;
    int det_u = 1, det_v = 1;

    std::vector<Int> diagonal() const;
    bool verify(const IntMatrix &original) const;
};

// gcd-pivot elimination with minimal-absolute-value pivot selection
// (ties: smallest row, then column index).
SmithDecomposition smith_normal_form(const IntMatrix &a);

struct AbelianInvariants {
    std::vector<Int> torsion; // invariant factors > 1, each dividing the next
    std::size_t free_rank = 0;

    bool operator==(const AbelianInvariants &) const = default;
    std::string str() const; // e.g. "Z x Z_3 x Z_3", "1" for the trivial group
};

// Invariants of Z^cols / rowspace(relations).
AbelianInvariants invariants_of(const IntMatrix &relations);

// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix exponent_matrix(const Presentation &pres);

AbelianInvariants abelianization(const Presentation &pres);

// Classify the abelian group given by relation rows on `generators` implicit
// generators (rows may be empty; every row must have `generators` entries).
AbelianInvariants subgroup_matrix_invariants(const std::vector<std::vector<Int>> &rows,
                                             std::size_t generators);

// Matrix text format: first line "ROWS COLS", then ROWS whitespace-separated
// lines of integers.
IntMatrix parse_matrix(const std::string &text);
std::string format_matrix(const IntMatrix &m);

} // namespace gbs

#pragma once

#include <cstdint>
#include <vector>

#include "carter/partition.hpp"

namespace carter {

/// Rows of a Young tableau, entries 1..degree.
using Tableau = std::vector<std::vector<int>>;

/// Row-equivalence class of a tableau: each row stored sorted.
struct Tabloid {
    Partition shape;
    std::vector<std::vector<int>> rows;

    friend bool operator==(const Tabloid&, const Tabloid&) = default;
    friend auto operator<=>(const Tabloid& a, const Tabloid& b) { return a.rows <=> b.rows; }
};

/// Packed tabloid: digit k-1 (base = shape length) is the row holding k.
using TabloidKey = std::uint64_t;

Tabloid decode_tabloid(const Partition& shape, TabloidKey key);

/// e_T expanded in the tabloid basis; coefficients are +-1.
struct PolytabloidVector {
    Partition shape;
    Tableau source;
    std::vector<std::pair<TabloidKey, int>> coords;  // sorted by key
};

struct GramMatrix {
    Partition shape;
    std::int64_t dim = 0;
    std::vector<std::vector<std::int64_t>> entries;
};

inline constexpr std::int64_t kTableauDegreeLimit = 12;
inline constexpr std::int64_t kGramDegreeLimit = 10;

/// Standard tableaux ordered lexicographically by row-reading word.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

PolytabloidVector polytabloid(const Partition& shape, const Tableau& t);

/// <e_S, e_T> with the tabloids orthonormal.
std::int64_t pairing(const PolytabloidVector& s, const PolytabloidVector& t);

GramMatrix gram_matrix(const Partition& lambda);
GramMatrix gram_matrix(const Partition& lambda, const std::vector<Tableau>& basis);

/// Rank over GF(p) by Gauss-Jordan reduction with modular inverses.
std::int64_t rank_mod_p(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p);

/// Rank over GF(p) by division-free (fraction-free) elimination: rows are
/// combined as pivot*row - lead*pivot_row, residues taken mod p throughout.
std::int64_t rank_fraction_free_mod_p(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p);

/// Above this dimension the oracle skips the exact determinant cross-check.
inline constexpr std::int64_t kExactDeterminantDimLimit = 100;

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const std::vector<std::vector<std::int64_t>>& m);

/// Gram matrix nonsingular mod p. Both modular rank routes must agree, and
/// the exact determinant too for small dimensions.
bool specht_irreducible_mod_p(const Partition& lambda, std::int64_t p);

struct OracleRow {
    Partition shape;
    bool specht_irreducible;
    bool injective;
};

struct OracleReport {
    std::int64_t p;
    std::int64_t max_degree;
    std::vector<OracleRow> rows;
    std::vector<Partition> mismatches;
};

/// Every p-regular partition of degree <= max_degree: Gram irreducibility vs
/// the classifier at l = p.
OracleReport oracle_crosscheck(std::int64_t max_degree, std::int64_t p, unsigned threads = 1);

}  // namespace carter

#pragma once

// Brute-force oracles, independent of the library routes they check.

#include <cstdint>
#include <vector>

#include "mang/bigint.hpp"
#include "mang/dissection.hpp"
#include "mang/dyck.hpp"
#include "mang/flip_poset.hpp"

namespace oracle {

mang::BigInt binomial(long n, long k);

/// (1/n) binom((m+1)n, n-1).
mang::BigInt fuss_catalan(int m, int n);

/// Every family of n-1 pairwise non-crossing diagonals of the (mn+2)-gon
/// whose regions all have m+2 vertices.  Region sizes come from chord
/// nesting, not from a boundary walk.  Sorted chord lists, sorted overall.
std::vector<std::vector<mang::Chord>> brute_dissections(int m, int n);

/// Maximal chains from the minimum, one path at a time.
mang::BigInt chain_count_dfs(const mang::FinitePoset& poset);

/// Comparable pairs, by a graph search over cover edges from every element.
std::uint64_t interval_count_search(const mang::FinitePoset& poset);

/// All m-vectors of size n with |v| <= n-1, filtered by the prefix
/// inequality.  Lexicographic order.
std::vector<mang::MVector> brute_dyck(int m, int n);

/// Rank over Q by plain Gaussian elimination on rationals.
std::size_t rational_rank(const std::vector<std::vector<mang::BigInt>>& rows);

}  // namespace oracle

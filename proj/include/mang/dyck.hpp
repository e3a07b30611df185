#pragma once

// m-vectors of size n: length-mn nonnegative integer vectors read as n blocks
// of m letters.  Position l (1-based) belongs to block ceil(l/m) and carries
// letter ((l-1) mod m) + 1.

#include <string>
#include <vector>

#include "mang/limits.hpp"

namespace mang {

struct MVector {
  int m = 1;
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()) / m; }
  int total() const;

  friend auto operator<=>(const MVector&, const MVector&) = default;
};

/// Throws InvalidArgument unless the length is a multiple of m and every
/// entry is nonnegative.
void validate(const MVector& v);

/// Column sums w_j = sum_i v_{mi+j}.
std::vector<int> weight(const MVector& v);

/// No run of m consecutive zeros anywhere in the vector.
bool is_m_composition(const MVector& v);

/// m (v_1 + ... + v_l) < l for every prefix.
bool is_dyck(const MVector& v);

/// All m-Dyck vectors of size n in lexicographic order.
std::vector<MVector> enumerate_dyck(int m, int n, const Limits& limits = Limits::from_env());

/// Lattice path: for each entry, that many 'R' steps then one 'U'.
std::string vector_to_lattice_path(const MVector& v);

/// Dyck test on the path itself: every visited point (x, y) has x <= y.
bool path_stays_above_diagonal(int m, const std::string& path);

/// Every m-composition of the given total weight and size exactly `size`,
/// in lexicographic order.
std::vector<MVector> compositions_of(int m, int size, int total);

}  // namespace mang

#pragma once

// M-angulations of the (mn+2)-gon: dissections of a convex polygon into
// (m+2)-sided regions.  Vertices are numbered 0..mn+1 counter-clockwise and
// vertex 0 is the apex of the reference fan Q0.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mang/limits.hpp"

namespace mang {

/// A diagonal between two polygon vertices, always stored with a < b.
struct Chord {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// True iff the two chords interleave.  Chords sharing an endpoint never cross.
constexpr bool chords_cross(Chord c1, Chord c2) {
  return (c1.a < c2.a && c2.a < c1.b && c1.b < c2.b) ||
         (c2.a < c1.a && c1.a < c2.b && c2.b < c1.b);
}

/// Letter index in 1..m carried by polygon vertex v >= 1.  The vertices on
/// both sides of the apex carry the last letter m.
constexpr int vertex_letter(int m, int v) { return ((v + m - 2) % m) + 1; }

/// A region of a dissection: its vertices in counter-clockwise order,
/// starting from the smallest index.
using Region = std::vector<int>;

class Dissection {
 public:
  /// Validates every invariant; throws Error(MalformedDissection) otherwise.
  /// The chord list may be given in any order.
  Dissection(int m, int n, std::vector<Chord> diagonals);

  /// Skips validation.  The chords must already be sorted and valid.
  static Dissection trusted(int m, int n, std::vector<Chord> sorted_diagonals);

  int m() const { return m_; }
  int n() const { return n_; }
  int vertex_count() const { return m_ * n_ + 2; }
  std::span<const Chord> diagonals() const { return diagonals_; }
  bool contains(Chord c) const;

  friend bool operator==(const Dissection&, const Dissection&) = default;
  friend std::strong_ordering operator<=>(const Dissection& x, const Dissection& y);

  std::string to_string() const;

 private:
  Dissection() = default;

  int m_ = 1;
  int n_ = 1;
  std::vector<Chord> diagonals_;
};

struct DissectionHash {
  std::size_t operator()(const Dissection& d) const noexcept;
};

/// The fan Q0 with diagonals (0, mk+1), 1 <= k < n.
Dissection make_q0(int m, int n);

/// Q0 diagonal number k (1-based, counter-clockwise).
constexpr Chord q0_diagonal(int m, int k) { return {0, m * k + 1}; }

constexpr bool is_q0_diagonal(int m, int n, Chord c) {
  return c.a == 0 && c.b > 1 && (c.b - 1) % m == 0 && (c.b - 1) / m < n;
}

/// Regions of Q, sorted lexicographically by vertex list.
std::vector<Region> regions(const Dissection& q);

/// Regions of an arbitrary non-crossing chord family on an N-gon.  Throws
/// MalformedDissection if the chords cross or leave the polygon.
std::vector<Region> regions_of(int vertex_count, std::span<const Chord> chords);

/// Every M-angulation of the (mn+2)-gon, in canonical (sorted) order.
std::vector<Dissection> enumerate_dissections(int m, int n,
                                              const Limits& limits = Limits::from_env());

/// Fuss-Catalan number (1/(mn+1)) binom((m+1)n, n).
unsigned long long fuss_catalan(int m, int n);

/// Q shares no diagonal with Q0.
bool is_final(const Dissection& q);

/// Number of diagonals of Q not in Q0.
int rank(const Dissection& q);

/// The m dissections covering Q obtained by flipping the Q0 diagonal d.
/// Throws NotAQ0Diagonal unless d is in Q and in Q0.
std::vector<Dissection> flip_up(const Dissection& q, Chord d);

/// Cuts Q along its Q0 diagonals.  Pieces come counter-clockwise, each one a
/// final M-angulation re-indexed with the apex as its own vertex 0.
std::vector<Dissection> cut_L(const Dissection& q);

/// Inverse of cut_L: glues final M-angulations back around the apex.
/// Throws NotFinal if some part is not final, InvalidArgument if the list is
/// empty or the parts disagree on m.
Dissection glue_L(std::span<const Dissection> parts);

/// Embeds B0 (k regions) into the (mk+2)-gon formed by the apex regions of
/// glue_L(parts).  Throws ArityMismatch when B0 has the wrong number of
/// regions and NotFinal when some part is not final.
Dissection glue_G(const Dissection& b0, std::span<const Dissection> parts);

/// Vertices of the region formed by the apex regions of glue_L(parts), in
/// increasing order; entry j is where vertex j of B0 lands in glue_G.
std::vector<int> apex_hull(std::span<const Dissection> parts);

struct WidthAndBlocks {
  int width = 0;
  std::vector<Dissection> blocks;
};

/// For final Q, the polygons left after removing the apex region R0.  Each
/// block is re-indexed from its smaller vertex on R0.  Throws NotFinal.
WidthAndBlocks width_and_blocks(const Dissection& q);

/// For final Q, the width-1 final M-angulation made of R0 with only block j
/// attached (others collapsed to sides).  Throws NotFinal.
Dissection single_block_final(const Dissection& q, int block);

/// Chords from the apex to the vertices of R0 other than 0 and its two
/// neighbours.  Throws NotFinal.
std::vector<Chord> apex_diagonal_set_D(const Dissection& q);

}  // namespace mang

#pragma once

// The flip poset P(m,n) on M-angulations: Q is covered by the dissections
// obtained by flipping one of its Q0 diagonals.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mang/bigint.hpp"
#include "mang/dissection.hpp"
#include "mang/limits.hpp"

namespace mang {

using Bits = boost::dynamic_bitset<std::uint64_t>;

struct FinitePoset {
  int m = 1;
  int n = 1;
  std::vector<Dissection> elements;        // canonical order
  std::vector<std::vector<int>> covers;    // i -> elements covering i
  std::vector<std::vector<int>> covered;   // i -> elements covered by i
  std::vector<int> ranks;
  std::vector<Bits> up;                    // up[i][j]   iff i <= j
  std::vector<Bits> down;                  // down[i][j] iff j <= i

  int size() const { return static_cast<int>(elements.size()); }
  bool leq(int i, int j) const { return up[i][j]; }
  /// Index of q in `elements`, or -1.
  int index_of(const Dissection& q) const;
  int minimum() const { return index_of(make_q0(m, n)); }
  std::vector<int> maximal_elements() const;
};

/// Throws SizeGuardExceeded when m*n is above the interval cap.
FinitePoset build_poset(int m, int n, const Limits& limits = Limits::from_env());

/// Every cover raises rank by one, rank equals BFS distance from Q0, and
/// Q0 is below everything.
bool rank_is_consistent(const FinitePoset& poset);

struct CheckResult {
  bool pass = true;
  std::optional<Dissection> counterexample;
  std::string detail;

  static CheckResult fail(Dissection witness, std::string why) {
    return {false, std::move(witness), std::move(why)};
  }
};

/// Elements of rank r have exactly m(n-1-r) upper covers.
CheckResult cover_count_check(const FinitePoset& poset);

/// Number of maximal chains from Q0, by dynamic programming over covers.
BigInt maximal_chain_count(const FinitePoset& poset);

/// A Q0 diagonal crossing exactly one diagonal of Q.  Throws InvalidArgument
/// for Q = Q0 and NoWitness if none exists.
Chord lemma_descent_witness(const Dissection& q);

/// The element covered by Q obtained by replacing the diagonal crossed by
/// the witness with the witness itself.
Dissection lemma_descent_step(const Dissection& q);

struct Interval {
  int bottom = 0;
  int top = 0;
  std::vector<int> elements;  // increasing poset indices
};

/// Throws InvalidArgument unless bottom <= top.
Interval make_interval(const FinitePoset& poset, int bottom, int top);

/// mu(bottom, top) by the recursion mu(a,a) = 1, mu(a,b) = -sum_{a<=z<b} mu(a,z).
long long mobius(const FinitePoset& poset, const Interval& interval);

/// mu(a, z) for every z (zero where a is not below z).
std::vector<long long> mobius_from(const FinitePoset& poset, int a);

struct IntervalDecomposition {
  Dissection b0;
  std::vector<Dissection> parts;
};

/// (B0, parts) with parts = cut_L(bottom), bottom = glue_G(Q0, parts) and
/// top = glue_G(B0, parts).  Throws DecompositionFailure when no such B0
/// exists.
IntervalDecomposition interval_decompose(const Dissection& bottom, const Dissection& top);

/// Nodes are poset indices; parent[i] indexes into nodes, -1 for roots.
struct ForestPoset {
  std::vector<int> nodes;
  std::vector<int> parent;
};

/// Number of order ideals (down-closed subsets) of a forest.
unsigned long long count_order_ideals(const ForestPoset& forest);

struct IntervalStructure {
  bool is_lattice = false;
  bool is_distributive = false;
  bool join_irreducibles_form_forest = false;
  unsigned long long ideal_count = 0;
  ForestPoset forest;
  std::string failure;  // empty when everything holds
};

/// Join-irreducibles J (elements with exactly one lower cover inside the
/// interval), their induced order, and a certificate that z -> {j in J : j <= z}
/// is an order isomorphism onto the ideals of J.  That isomorphism makes the
/// interval a distributive lattice, with meet and join given by intersection
/// and union of masks.
IntervalStructure analyze_interval(const FinitePoset& poset, const Interval& interval);

/// Same analysis, throwing StructureViolation on failure.
IntervalStructure interval_structure(const FinitePoset& poset, const Interval& interval);

/// Brute-force reference: pairwise meets and joins searched inside the
/// interval, distributivity checked on every triple, ideals of J counted by
/// subset enumeration.  Cubic; for tests and benchmarks only.
IntervalStructure analyze_interval_reference(const FinitePoset& poset, const Interval& interval);

/// Every final Q covers exactly width(Q) elements.
CheckResult width_cover_check(const FinitePoset& poset);

/// The up-set of A- is the image of P(m,k), k = |cut_L(A-)|, under
/// B0 -> glue_G(B0, cut_L(A-)), with covers preserved both ways.
CheckResult upper_ideal_iso_check(const FinitePoset& poset, int a_minus,
                                  const Limits& limits = Limits::from_env());
CheckResult upper_ideal_iso_check(const FinitePoset& poset, const FinitePoset& small, int a_minus);

/// Multiset of (lower-cover count, upper-cover count) pairs inside an interval.
using DegreeProfile = std::map<std::pair<int, int>, unsigned long long>;
DegreeProfile degree_profile(const FinitePoset& poset, const Interval& interval);
/// Degree profile of a product of posets.
DegreeProfile product_profile(const DegreeProfile& x, const DegreeProfile& y);

/// Whether the whole poset is a lattice (recorded, not asserted).
bool is_lattice(const FinitePoset& poset);

}  // namespace mang

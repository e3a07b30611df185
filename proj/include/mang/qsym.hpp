#pragma once

// Fundamental G^m-quasisymmetric polynomials and the degree-by-degree check
// that the Dyck monomials span a complement of the ideal they generate.

#include <string>
#include <utility>
#include <vector>

#include "mang/bigint.hpp"
#include "mang/dyck.hpp"
#include "mang/limits.hpp"
#include "mang/poly.hpp"

namespace mang {

/// Letters of w_c with the block each one comes from.
struct QSymWord {
  int m = 1;
  std::vector<std::pair<int, int>> letters;  // (letter, block), both 1-based

  /// Letters concatenated, blocks separated by '|': "y|xxz".
  std::string to_string() const;
};

/// Throws InvalidArgument unless c is an m-composition.
QSymWord word_of_composition(const MVector& c);

/// F_c in the variables of size n: the sum over index maps that are weakly
/// increasing inside each block and strictly increasing between blocks.
/// Zero when c has more than n blocks.
SparsePoly fundamental_qsym(const MVector& c, int n);

struct GradedComponent {
  int degree = 0;
  std::vector<Monomial> monomials;          // every monomial of this degree
  std::vector<std::vector<BigInt>> rows;    // mu * F_c in that basis
};

/// Every monomial of total degree d in mn variables, lexicographically
/// ordered on exponent vectors.
std::vector<Monomial> monomials_of_degree(int m, int n, int d);

/// The degree-d slice of the ideal generated by the F_c with |c| >= 1.
/// Throws SizeGuardExceeded when the slice has more columns than allowed.
GradedComponent ideal_graded_matrix(int m, int n, int d, const Limits& limits = Limits::from_env());

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t matrix_rank(std::vector<std::vector<BigInt>> rows);

struct DegreeReport {
  int degree = 0;
  std::size_t monomials = 0;
  std::size_t ideal_rank = 0;
  std::size_t dyck_count = 0;
  std::size_t completed_rank = 0;  // rank after appending the Dyck monomials
  bool pass = false;
};

struct QuotientReport {
  int m = 1;
  int n = 1;
  std::vector<DegreeReport> degrees;  // d = 0..n
  std::vector<std::size_t> hilbert;   // quotient dimension per degree
  std::size_t total_dimension = 0;
  bool pass = false;
};

/// Per-degree ranks for d = 0..n.  Never throws on a failed degree; `pass`
/// records the outcome.
QuotientReport basis_graded_report(int m, int n, const Limits& limits = Limits::from_env());

/// Same report, throwing VerificationFailure naming the first bad degree.
QuotientReport verify_basis_graded(int m, int n, const Limits& limits = Limits::from_env());

}  // namespace mang

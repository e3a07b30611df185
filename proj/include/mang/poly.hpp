#pragma once

// Polynomials in the mn variables x_1 < y_1 < ... < w_1 < x_2 < ... < w_n.
// Letter r in 1..m, index k in 1..n, linear position m(k-1)+r.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mang/bigint.hpp"
#include "mang/dissection.hpp"
#include "mang/dyck.hpp"

namespace mang {

struct Variable {
  int letter = 1;
  int index = 1;

  // Index first, then letter: this is the variable order.
  friend std::strong_ordering operator<=>(const Variable& x, const Variable& y) {
    if (auto c = x.index <=> y.index; c != 0) return c;
    return x.letter <=> y.letter;
  }
  friend bool operator==(const Variable&, const Variable&) = default;
};

constexpr int position(int m, Variable v) { return m * (v.index - 1) + v.letter; }

/// "x", "y", "z", "w" for m <= 4, otherwise "t<r>_".
std::string letter_name(int m, int letter);
std::string variable_name(int m, Variable v);

/// A monomial is its exponent m-vector.
struct Monomial {
  MVector exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// The lex order: A_v < A_w iff the last non-zero entry of v - w is negative.
bool lex_less(const Monomial& v, const Monomial& w);

struct LexGreater {
  bool operator()(const Monomial& v, const Monomial& w) const { return lex_less(w, v); }
};

Monomial vector_to_monomial(const MVector& v);
MVector monomial_to_vector(const Monomial& mono);

Monomial unit_monomial(int m, int n);
Monomial variable_monomial(int m, int n, Variable v);
Monomial operator*(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& a, const Monomial& b);

/// "x5 y5^3 y7"; the unit monomial prints as "1".
std::string to_string(const Monomial& mono);

/// high - low, with index(high) > index(low).
struct BinomialFactor {
  Variable high;
  Variable low;

  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
};

/// Canonical factor order: high ascending, then low descending.
bool factor_less(const BinomialFactor& f, const BinomialFactor& g);

/// Product of binomial factors; the empty product is 1.
struct FactoredPoly {
  int m = 1;
  int n = 1;
  std::vector<BinomialFactor> factors;  // kept in factor_less order

  friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;
};

/// "(x5-y4)(y5-x3)"; the unit prints as "1".
std::string to_string(const FactoredPoly& p);

/// Sparse polynomial with exact integer coefficients, iterated in
/// lex-descending order.  No zero coefficient is ever stored.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, BigInt, LexGreater>;

  SparsePoly(int m, int n) : m_(m), n_(n) {}

  static SparsePoly constant(int m, int n, const BigInt& c);
  static SparsePoly term(const Monomial& mono, const BigInt& c);

  int m() const { return m_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coefficient(const Monomial& mono) const;

  /// Lex-largest monomial; throws InvalidArgument on the zero polynomial.
  const Monomial& leading_monomial() const;

  void add_term(const Monomial& mono, const BigInt& c);
  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  int m_;
  int n_;
  Terms terms_;
};

/// The binomial m_d for a diagonal of an M-angulation of the (mn+2)-gon, or
/// nullopt for a Q0 diagonal.  Throws EmptyCrossing when a non-Q0 chord
/// crosses no Q0 diagonal.
std::optional<BinomialFactor> binomial_for_diagonal(int m, int n, Chord d);

/// P_Q, the product of m_d over the diagonals of Q.
FactoredPoly poly_for_dissection(const Dissection& q);

/// Product of the high variables.
Monomial leading_monomial(const FactoredPoly& p);

SparsePoly expand(const FactoredPoly& p);

/// Multiset inclusion of factors.  Sound because the factors are pairwise
/// non-associate irreducibles.
bool divides(const FactoredPoly& p, const FactoredPoly& q);

/// a / b when b divides a exactly, by multivariate long division in lex
/// order; nullopt otherwise.
std::optional<SparsePoly> exact_quotient(const SparsePoly& a, const SparsePoly& b);

struct SignedFactoredPoly {
  FactoredPoly poly;
  int sign = 1;
};

/// Relabels variables by the reflection of the fan: the last letter is fixed,
/// letters 1..m-1 are reversed and index k becomes n+1-k.  Factors are
/// re-oriented so the high variable has the larger index, and every swap
/// flips the sign.
SignedFactoredPoly involution_image(const FactoredPoly& p);

}  // namespace mang

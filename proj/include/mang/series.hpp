#pragma once

// Truncated formal power series in x with exact coefficients, and the
// generating functions of M-angulations, final M-angulations, ranks and
// intervals.

#include <vector>

#include "mang/bigint.hpp"
#include "mang/error.hpp"

namespace mang {

/// Polynomial in z with rational coefficients (coefficient k of z^k).
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(Rational c) { if (c != 0) coeffs_.push_back(std::move(c)); }  // NOLINT: implicit lift
  static ZPoly monomial(const Rational& c, int k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coefficient(int k) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational evaluate(const Rational& z) const;

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator-(const ZPoly& a) { return ZPoly() - a; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly&, const ZPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Series c_0 + c_1 x + ... + c_N x^N, all arithmetic modulo x^{N+1}.
/// Coeff is Rational or ZPoly.
template <class Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  }

  static TruncatedSeries x(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = Coeff(Rational(1));
    return s;
  }
  static TruncatedSeries constant(int order, Coeff c) {
    TruncatedSeries s(order);
    s.c_[0] = std::move(c);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Coeff& operator[](int k) const { return c_[k]; }
  Coeff& operator[](int k) { return c_[k]; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == Coeff()) continue;
      for (std::size_t j = 0; i + j < out.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  bool is_zero() const {
    for (const Coeff& c : c_) {
      if (!(c == Coeff())) return false;
    }
    return true;
  }

  TruncatedSeries pow(int e) const {
    TruncatedSeries out = constant(order(), Coeff(Rational(1)));
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  /// sum_k this[k] * inner^k; inner must have zero constant term.
  TruncatedSeries compose(const TruncatedSeries& inner) const {
    if (!(inner.c_[0] == Coeff())) {
      throw Error(ErrorKind::InvalidArgument, "composition needs a zero constant term");
    }
    TruncatedSeries out = constant(order(), c_[0]);
    TruncatedSeries power = constant(order(), Coeff(Rational(1)));
    for (int k = 1; k <= order(); ++k) {
      power = power * inner;
      TruncatedSeries term = power;
      for (auto& c : term.c_) c = c_[k] * c;
      out += term;
    }
    return out;
  }

  /// 1 / (1 - this) = sum_k this^k; requires a zero constant term.
  TruncatedSeries geometric() const {
    if (!(c_[0] == Coeff())) throw Error(ErrorKind::InvalidArgument, "geometric needs a zero constant term");
    TruncatedSeries out = constant(order(), Coeff(Rational(1)));
    TruncatedSeries power = out;
    for (int k = 1; k <= order(); ++k) {
      power = power * *this;
      out += power;
    }
    return out;
  }

 private:
  std::vector<Coeff> c_;
};

using Series = TruncatedSeries<Rational>;
using BivariateSeries = TruncatedSeries<ZPoly>;

/// Solution of T = x (1 + T)^{m+1} by fixed-point iteration.
Series series_T(int m, int order);

/// Final M-angulations, x (1 + T)^m; throws VerificationFailure unless it
/// agrees with T / (1 + T).
Series series_F(int m, int order);

/// Rank generating function (F(zx)/z) / (1 - F(zx)/z).
BivariateSeries series_G(int m, int order);

/// Intervals, T(F); throws VerificationFailure unless T(F) = T(x (1+T)^m)
/// with F computed as T/(1+T).
Series series_I(int m, int order);

/// sum_{k<n} (n-k)/n binom(mn+k-1, k) z^k as integer coefficients.
std::vector<BigInt> rank_polynomial(int m, int n);

/// The three defining-equation residuals, each zero mod x^{order+1}.
Series residual_T(int m, int order);
Series residual_F(int m, int order);
Series residual_I(int m, int order);

}  // namespace mang

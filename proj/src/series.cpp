#include "mang/series.hpp"

#include <string>

namespace mang {

ZPoly ZPoly::monomial(const Rational& c, int k) {
  ZPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
  p.coeffs_.back() = c;
  return p;
}

Rational ZPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Rational ZPoly::evaluate(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

namespace {

void check_args(int m, int order) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be at least 1");
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "truncation order must be at least 1");
}

BigInt binomial(long top, long k) {
  if (k < 0 || k > top) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (top - k + i) / i;
  return r;
}

Series one_plus(const Series& s) { return Series::constant(s.order(), Rational(1)) + s; }

Series solve_T(int m, int order) {
  const Series x = Series::x(order);
  Series t(order);
  // T has valuation 1, so each pass fixes one more coefficient.
  for (int i = 0; i < order; ++i) t = x * one_plus(t).pow(m + 1);
  return t;
}

Series F_by_power(const Series& t, int m) { return Series::x(t.order()) * one_plus(t).pow(m); }

Series F_by_quotient(const Series& t) {
  Series neg = Series(t.order()) - t;
  return t * neg.geometric();
}

}  // namespace

Series series_T(int m, int order) {
  check_args(m, order);
  Series t = solve_T(m, order);
  for (int n = 1; n <= order; ++n) {
    Rational closed(binomial(static_cast<long>(m + 1) * n, n), BigInt(m * n + 1));
    if (t[n] != closed) {
      throw Error(ErrorKind::VerificationFailure,
                  "T coefficient " + std::to_string(n) + " disagrees with the Fuss-Catalan number");
    }
  }
  return t;
}

Series series_F(int m, int order) {
  check_args(m, order);
  const Series t = solve_T(m, order);
  Series f = F_by_power(t, m);
  if (!(f == F_by_quotient(t))) {
    throw Error(ErrorKind::VerificationFailure, "x(1+T)^m and T/(1+T) disagree");
  }
  return f;
}

BivariateSeries series_G(int m, int order) {
  const Series f = series_F(m, order);
  BivariateSeries s(order);
  for (int n = 1; n <= order; ++n) s[n] = ZPoly::monomial(f[n], n - 1);
  return s * s.geometric();
}

Series series_I(int m, int order) {
  check_args(m, order);
  const Series t = solve_T(m, order);
  Series by_quotient = t.compose(F_by_quotient(t));
  Series by_power = t.compose(F_by_power(t, m));
  if (!(by_quotient == by_power)) {
    throw Error(ErrorKind::VerificationFailure, "T(T/(1+T)) and T(x(1+T)^m) disagree");
  }
  return by_power;
}

std::vector<BigInt> rank_polynomial(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "rank_polynomial needs m, n >= 1");
  std::vector<BigInt> out;
  for (int k = 0; k < n; ++k) {
    BigInt numerator = BigInt(n - k) * binomial(static_cast<long>(m) * n + k - 1, k);
    if (numerator % n != 0) {
      throw Error(ErrorKind::VerificationFailure, "non-integral rank coefficient at k = " + std::to_string(k));
    }
    out.push_back(numerator / n);
  }
  return out;
}

Series residual_T(int m, int order) {
  check_args(m, order);
  const Series t = solve_T(m, order);
  return t - Series::x(order) * one_plus(t).pow(m + 1);
}

Series residual_F(int m, int order) {
  check_args(m, order);
  const Series t = solve_T(m, order);
  return F_by_power(t, m) - F_by_quotient(t);
}

Series residual_I(int m, int order) {
  check_args(m, order);
  const Series t = solve_T(m, order);
  const Series f = F_by_power(t, m);
  // T(F) expanded term by term, independent of compose().
  Series composed(order);
  Series power = Series::constant(order, Rational(1));
  for (int k = 1; k <= order; ++k) {
    power = power * f;
    Series term = power;
    for (int i = 0; i <= order; ++i) term[i] *= t[k];
    composed += term;
  }
  return series_I(m, order) - composed;
}

}  // namespace mang

#include "mang/poly.hpp"

#include <algorithm>
#include <sstream>

#include "mang/error.hpp"

namespace mang {

std::string letter_name(int m, int letter) {
  static constexpr const char* kLetters[] = {"x", "y", "z", "w"};
  if (m <= 4) return kLetters[letter - 1];
  return "t" + std::to_string(letter) + "_";
}

std::string variable_name(int m, Variable v) { return letter_name(m, v.letter) + std::to_string(v.index); }

bool lex_less(const Monomial& v, const Monomial& w) {
  const auto& a = v.exponents.entries;
  const auto& b = w.exponents.entries;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Monomial vector_to_monomial(const MVector& v) {
  validate(v);
  return Monomial{v};
}

MVector monomial_to_vector(const Monomial& mono) { return mono.exponents; }

Monomial unit_monomial(int m, int n) { return Monomial{MVector{m, std::vector<int>(m * n, 0)}}; }

Monomial variable_monomial(int m, int n, Variable v) {
  Monomial mono = unit_monomial(m, n);
  mono.exponents.entries[position(m, v) - 1] = 1;
  return mono;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents.entries.size(); ++i) {
    out.exponents.entries[i] += b.exponents.entries[i];
  }
  return out;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exponents.entries.size(); ++i) {
    if (a.exponents.entries[i] > b.exponents.entries[i]) return false;
  }
  return true;
}

std::string to_string(const Monomial& mono) {
  const int m = mono.exponents.m;
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < mono.exponents.entries.size(); ++i) {
    int e = mono.exponents.entries[i];
    if (e == 0) continue;
    Variable v{static_cast<int>(i) % m + 1, static_cast<int>(i) / m + 1};
    if (!first) os << ' ';
    first = false;
    os << variable_name(m, v);
    if (e > 1) os << '^' << e;
  }
  return first ? "1" : os.str();
}

bool factor_less(const BinomialFactor& f, const BinomialFactor& g) {
  if (f.high != g.high) return f.high < g.high;
  return g.low < f.low;
}

std::string to_string(const FactoredPoly& p) {
  if (p.factors.empty()) return "1";
  std::string out;
  for (const BinomialFactor& f : p.factors) {
    out += '(' + variable_name(p.m, f.high) + '-' + variable_name(p.m, f.low) + ')';
  }
  return out;
}

SparsePoly SparsePoly::constant(int m, int n, const BigInt& c) {
  SparsePoly p(m, n);
  p.add_term(unit_monomial(m, n), c);
  return p;
}

SparsePoly SparsePoly::term(const Monomial& mono, const BigInt& c) {
  SparsePoly p(mono.exponents.m, mono.exponents.size());
  p.add_term(mono, c);
  return p;
}

BigInt SparsePoly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? BigInt(0) : it->second;
}

const Monomial& SparsePoly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading monomial of zero");
  return terms_.begin()->first;
}

void SparsePoly::add_term(const Monomial& mono, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out(a.m_, a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::optional<BinomialFactor> binomial_for_diagonal(int m, int n, Chord d) {
  if (is_q0_diagonal(m, n, d)) return std::nullopt;
  // Q0 diagonal k ends at mk+1; the crossed ones form a consecutive run i..j.
  int i = 0, j = 0;
  for (int k = 1; k < n; ++k) {
    int end = m * k + 1;
    if (d.a < end && end < d.b) {
      if (i == 0) i = k;
      j = k;
    }
  }
  if (i == 0 || d.a == 0) {
    throw Error(ErrorKind::EmptyCrossing, "chord (" + std::to_string(d.a) + "," +
                                              std::to_string(d.b) + ") crosses no Q0 diagonal");
  }
  return BinomialFactor{Variable{vertex_letter(m, d.b), j + 1}, Variable{vertex_letter(m, d.a), i}};
}

FactoredPoly poly_for_dissection(const Dissection& q) {
  FactoredPoly p{q.m(), q.n(), {}};
  for (const Chord& d : q.diagonals()) {
    if (auto f = binomial_for_diagonal(q.m(), q.n(), d)) p.factors.push_back(*f);
  }
  std::sort(p.factors.begin(), p.factors.end(), factor_less);
  return p;
}

Monomial leading_monomial(const FactoredPoly& p) {
  Monomial mono = unit_monomial(p.m, p.n);
  for (const BinomialFactor& f : p.factors) ++mono.exponents.entries[position(p.m, f.high) - 1];
  return mono;
}

SparsePoly expand(const FactoredPoly& p) {
  SparsePoly out = SparsePoly::constant(p.m, p.n, 1);
  for (const BinomialFactor& f : p.factors) {
    SparsePoly binomial(p.m, p.n);
    binomial.add_term(variable_monomial(p.m, p.n, f.high), 1);
    binomial.add_term(variable_monomial(p.m, p.n, f.low), -1);
    out = out * binomial;
  }
  return out;
}

bool divides(const FactoredPoly& p, const FactoredPoly& q) {
  // Both factor lists are sorted by factor_less.
  return std::includes(q.factors.begin(), q.factors.end(), p.factors.begin(), p.factors.end(),
                       factor_less);
}

std::optional<SparsePoly> exact_quotient(const SparsePoly& a, const SparsePoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  SparsePoly quotient(a.m(), a.n());
  SparsePoly rest = a;
  const Monomial& lead_b = b.leading_monomial();
  const BigInt lead_c = b.terms().begin()->second;
  while (!rest.is_zero()) {
    const auto& [lead_r, c] = *rest.terms().begin();
    // rest stays a multiple of b, so its leading term must be divisible.
    if (!monomial_divides(lead_b, lead_r) || c % lead_c != 0) return std::nullopt;
    Monomial shift = lead_r;
    for (std::size_t i = 0; i < shift.exponents.entries.size(); ++i) {
      shift.exponents.entries[i] -= lead_b.exponents.entries[i];
    }
    SparsePoly t = SparsePoly::term(shift, c / lead_c);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

SignedFactoredPoly involution_image(const FactoredPoly& p) {
  const int m = p.m;
  auto reflect = [&](Variable v) {
    return Variable{v.letter == m ? m : m - v.letter, p.n + 1 - v.index};
  };
  SignedFactoredPoly out{FactoredPoly{p.m, p.n, {}}, 1};
  for (const BinomialFactor& f : p.factors) {
    Variable hi = reflect(f.high), lo = reflect(f.low);
    if (hi.index < lo.index || (hi.index == lo.index && hi < lo)) {
      std::swap(hi, lo);
      out.sign = -out.sign;
    }
    out.poly.factors.push_back({hi, lo});
  }
  std::sort(out.poly.factors.begin(), out.poly.factors.end(), factor_less);
  return out;
}

}  // namespace mang

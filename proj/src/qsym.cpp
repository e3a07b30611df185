#include "mang/qsym.hpp"

#include <algorithm>
#include <optional>

#include "mang/error.hpp"

namespace mang {

std::string QSymWord::to_string() const {
  std::string out;
  int block = letters.empty() ? 0 : letters.front().second;
  for (const auto& [letter, b] : letters) {
    if (b != block) {
      out += '|';
      block = b;
    }
    out += letter_name(m, letter);
  }
  return out;
}

QSymWord word_of_composition(const MVector& c) {
  validate(c);
  if (!is_m_composition(c)) throw Error(ErrorKind::InvalidArgument, "not an m-composition");
  QSymWord w{c.m, {}};
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    int letter = static_cast<int>(i) % c.m + 1;
    int block = static_cast<int>(i) / c.m + 1;
    for (int e = 0; e < c.entries[i]; ++e) w.letters.emplace_back(letter, block);
  }
  return w;
}

SparsePoly fundamental_qsym(const MVector& c, int n) {
  const QSymWord word = word_of_composition(c);
  SparsePoly out(c.m, n);
  if (c.size() > n) return out;
  const std::size_t len = word.letters.size();
  Monomial mono = unit_monomial(c.m, n);
  auto place = [&](auto&& self, std::size_t pos, int prev_index, int prev_block) -> void {
    if (pos == len) {
      out.add_term(mono, 1);
      return;
    }
    const auto [letter, block] = word.letters[pos];
    int lowest = pos == 0 ? 1 : (block == prev_block ? prev_index : prev_index + 1);
    for (int i = lowest; i <= n; ++i) {
      int& e = mono.exponents.entries[position(c.m, Variable{letter, i}) - 1];
      ++e;
      self(self, pos + 1, i, block);
      --e;
    }
  };
  place(place, 0, 1, 0);
  return out;
}

std::vector<Monomial> monomials_of_degree(int m, int n, int d) {
  std::vector<Monomial> out;
  Monomial mono = unit_monomial(m, n);
  const int vars = m * n;
  auto fill = [&](auto&& self, int pos, int left) -> void {
    if (pos == vars - 1) {
      mono.exponents.entries[pos] = left;
      out.push_back(mono);
      mono.exponents.entries[pos] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      mono.exponents.entries[pos] = e;
      self(self, pos + 1, left - e);
    }
    mono.exponents.entries[pos] = 0;
  };
  fill(fill, 0, d);
  return out;
}

namespace {

BigInt binomial(long top, long k) {
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (top - k + i) / i;
  return r;
}

}  // namespace

GradedComponent ideal_graded_matrix(int m, int n, int d, const Limits& limits) {
  if (m < 1 || n < 1 || d < 0) throw Error(ErrorKind::InvalidArgument, "ideal_graded_matrix: bad arguments");
  if (binomial(m * n + d - 1, d) > limits.qsym_columns) {
    throw Error(ErrorKind::SizeGuardExceeded,
                "degree " + std::to_string(d) + " slice exceeds " + std::to_string(limits.qsym_columns) +
                    " columns (set MANG_MAX_QSYM_COLUMNS to override)");
  }
  GradedComponent out;
  out.degree = d;
  out.monomials = monomials_of_degree(m, n, d);
  // monomials_of_degree emits exponent vectors in lexicographic order.
  auto column = [&](const Monomial& mono) {
    auto it = std::lower_bound(out.monomials.begin(), out.monomials.end(), mono,
                               [](const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; });
    return static_cast<std::size_t>(it - out.monomials.begin());
  };
  for (int w = 1; w <= d; ++w) {
    const auto multipliers = monomials_of_degree(m, n, d - w);
    for (int size = 1; size <= n; ++size) {
      for (const MVector& c : compositions_of(m, size, w)) {
        SparsePoly f = fundamental_qsym(c, n);
        if (f.is_zero()) continue;
        for (const Monomial& mu : multipliers) {
          std::vector<BigInt> row(out.monomials.size());
          for (const auto& [mono, coeff] : f.terms()) row[column(mono * mu)] += coeff;
          out.rows.push_back(std::move(row));
        }
      }
    }
  }
  return out;
}

std::size_t matrix_rank(std::vector<std::vector<BigInt>> rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const auto& r) { return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; }); }),
             rows.end());
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  BigInt previous = 1;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const BigInt p = rows[rank][col];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const BigInt factor = rows[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt value = p * rows[i][j] - factor * rows[rank][j];
        // Bareiss: every entry is a minor, so the division is exact.
        if (value % previous != 0) throw Error(ErrorKind::VerificationFailure, "inexact Bareiss step");
        rows[i][j] = value / previous;
      }
      rows[i][col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

QuotientReport basis_graded_report(int m, int n, const Limits& limits) {
  QuotientReport report;
  report.m = m;
  report.n = n;
  report.degrees.resize(n + 1);
  std::vector<std::optional<Error>> errors(n + 1);

  // Degree slices are independent.
#pragma omp parallel for schedule(dynamic, 1)
  for (int d = 0; d <= n; ++d) {
    DegreeReport& row = report.degrees[d];
    row.degree = d;
    try {
      GradedComponent slice = d == 0 ? GradedComponent{0, monomials_of_degree(m, n, 0), {}}
                                     : ideal_graded_matrix(m, n, d, limits);
      row.monomials = slice.monomials.size();
      row.ideal_rank = matrix_rank(slice.rows);
      for (std::size_t col = 0; col < slice.monomials.size(); ++col) {
        if (!is_dyck(slice.monomials[col].exponents)) continue;
        ++row.dyck_count;
        std::vector<BigInt> unit(slice.monomials.size());
        unit[col] = 1;
        slice.rows.push_back(std::move(unit));
      }
      row.completed_rank = matrix_rank(std::move(slice.rows));
      row.pass = row.ideal_rank + row.dyck_count == row.monomials && row.completed_rank == row.monomials;
      if (d == n) row.pass = row.pass && row.ideal_rank == row.monomials;
    } catch (const Error& e) {
      errors[d] = e;
    }
  }
  for (const auto& e : errors) {
    if (e) throw *e;
  }
  report.pass = true;
  for (const DegreeReport& row : report.degrees) {
    report.hilbert.push_back(row.monomials - row.ideal_rank);
    report.total_dimension += row.monomials - row.ideal_rank;
    report.pass = report.pass && row.pass;
  }
  return report;
}

QuotientReport verify_basis_graded(int m, int n, const Limits& limits) {
  QuotientReport report = basis_graded_report(m, n, limits);
  for (const DegreeReport& row : report.degrees) {
    if (!row.pass) {
      throw Error(ErrorKind::VerificationFailure,
                  "quotient basis fails in degree " + std::to_string(row.degree) + " for (m,n) = (" +
                      std::to_string(m) + "," + std::to_string(n) + ")");
    }
  }
  return report;
}

}  // namespace mang

#include <doctest.h>

#include <algorithm>
#include <random>

#include "mang/error.hpp"
#include "mang/qsym.hpp"
#include "oracles.hpp"

using namespace mang;

TEST_CASE("words") {
  CHECK(word_of_composition(MVector{3, {0, 1, 0, 2, 0, 1}}).to_string() == "y|xxz");
  CHECK(word_of_composition(MVector{1, {1, 2}}).to_string() == "x|xx");
  CHECK_THROWS_AS(word_of_composition(MVector{2, {1, 0, 0, 1}}), Error);
}

TEST_CASE("fundamental_qsym") {
  CHECK(fundamental_qsym(MVector{1, {1, 2}}, 4).size() == 10);
  CHECK(fundamental_qsym(MVector{2, {0, 2, 1, 0}}, 2).size() == 1);
  CHECK(fundamental_qsym(MVector{2, {0, 2, 1, 0}}, 3).size() == 4);
  CHECK(fundamental_qsym(MVector{2, {1, 0, 1, 0, 1, 0}}, 2).is_zero());
  // F_(1) in three variables is x1 + x2 + x3.
  const SparsePoly f = fundamental_qsym(MVector{1, {1}}, 3);
  CHECK(f.size() == 3);
  for (int i = 1; i <= 3; ++i) CHECK(f.coefficient(variable_monomial(1, 3, {1, i})) == 1);

  for (int m = 1; m <= 3; ++m) {
    for (int size = 1; size <= 3; ++size) {
      for (int total = 1; total <= 3; ++total) {
        for (const MVector& c : compositions_of(m, size, total)) {
          const SparsePoly p = fundamental_qsym(c, 3);
          for (const auto& [mono, coeff] : p.terms()) {
            CHECK(coeff == 1);
            CHECK(weight(mono.exponents) == weight(c));
          }
        }
      }
    }
  }
}

TEST_CASE("monomials_of_degree") {
  CHECK(monomials_of_degree(2, 2, 2).size() == 10);
  CHECK(monomials_of_degree(1, 3, 0).size() == 1);
  const auto ms = monomials_of_degree(2, 3, 3);
  CHECK(BigInt(ms.size()) == oracle::binomial(8, 3));
  CHECK(std::is_sorted(ms.begin(), ms.end(),
                       [](const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; }));
}

TEST_CASE("ideal ranks") {
  CHECK(matrix_rank(ideal_graded_matrix(1, 2, 1).rows) == 1);
  CHECK(matrix_rank(ideal_graded_matrix(1, 2, 2).rows) == 3);
  for (int m = 1; m <= 4; ++m) CHECK(matrix_rank(ideal_graded_matrix(m, 3, 1).rows) == static_cast<std::size_t>(m));
  Limits tiny;
  tiny.qsym_columns = 5;
  CHECK_THROWS_AS(ideal_graded_matrix(2, 3, 2, tiny), Error);
}

TEST_CASE("Bareiss rank agrees with rational elimination") {
  for (auto [m, n, d] : {std::tuple{2, 2, 1}, std::tuple{2, 2, 2}, std::tuple{1, 3, 2}, std::tuple{2, 3, 2}}) {
    const auto rows = ideal_graded_matrix(m, n, d).rows;
    CHECK(matrix_rank(rows) == oracle::rational_rank(rows));
    auto shuffled = rows;
    std::mt19937 rng(7);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(matrix_rank(shuffled) == matrix_rank(rows));
  }
  std::vector<std::vector<BigInt>> rows{{2, 4, 6}, {1, 2, 3}, {0, 0, 5}};
  CHECK(matrix_rank(rows) == 2);
  CHECK(oracle::rational_rank(rows) == 2);
  CHECK(matrix_rank({}) == 0);
}

TEST_CASE("quotient basis") {
  QuotientReport r = verify_basis_graded(1, 2);
  CHECK(r.pass);
  CHECK(r.hilbert == std::vector<std::size_t>{1, 1, 0});
  CHECK(r.total_dimension == 2);
  r = verify_basis_graded(2, 2);
  CHECK(r.total_dimension == 3);
  r = verify_basis_graded(2, 3);
  CHECK(r.total_dimension == 12);
  CHECK(r.hilbert.back() == 0);
  for (const DegreeReport& row : r.degrees) CHECK(row.completed_rank == row.monomials);
  r = verify_basis_graded(3, 2);
  CHECK(r.total_dimension == 4);
  Limits tiny;
  tiny.qsym_columns = 5;
  CHECK_THROWS_AS(basis_graded_report(2, 3, tiny), Error);
}

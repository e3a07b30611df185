#include <doctest.h>

#include "mang/dyck.hpp"
#include "mang/error.hpp"
#include "mang/poly.hpp"
#include "oracles.hpp"

using namespace mang;

TEST_CASE("weight") {
  CHECK(weight(MVector{2, {1, 0, 2, 1, 0, 2, 3, 0}}) == std::vector<int>{6, 3});
  CHECK(weight(MVector{1, {0, 1, 1}}) == std::vector<int>{2});
  CHECK(MVector{3, {0, 0, 1, 2, 0, 0}}.total() == 3);
  CHECK(MVector{3, {0, 0, 1, 2, 0, 0}}.size() == 2);
}

TEST_CASE("validate") {
  CHECK_NOTHROW(validate(MVector{2, {0, 0}}));
  CHECK_THROWS_AS(validate(MVector{2, {0, 0, 1}}), Error);
  CHECK_THROWS_AS(validate(MVector{1, {0, -1}}), Error);
  CHECK_THROWS_AS(validate(MVector{0, {}}), Error);
}

TEST_CASE("is_dyck") {
  CHECK(is_dyck(MVector{2, {0, 0, 1, 0}}));
  CHECK(is_dyck(MVector{2, {0, 0, 0, 1}}));
  CHECK_FALSE(is_dyck(MVector{2, {0, 1, 0, 0}}));
  CHECK_FALSE(is_dyck(MVector{2, {1, 0, 0, 0}}));
  CHECK(is_dyck(MVector{1, {0, 1, 1}}));
  CHECK_FALSE(is_dyck(MVector{1, {0, 2, 0}}));
  CHECK(is_dyck(MVector{3, {0, 0, 0}}));
}

TEST_CASE("vector_to_monomial") {
  CHECK(to_string(vector_to_monomial(MVector{2, {1, 0, 1, 2, 0, 0, 1, 1}})) == "x1 x2 y2^2 x4 y4");
  CHECK(to_string(vector_to_monomial(MVector{2, {0, 0, 0, 0}})) == "1");
  const MVector v{3, {0, 0, 0, 0, 1, 2, 3, 0, 1}};
  CHECK(monomial_to_vector(vector_to_monomial(v)) == v);
}

TEST_CASE("enumerate_dyck matches the filtered brute force") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; m * n <= 12; ++n) {
      const auto fast = enumerate_dyck(m, n);
      CHECK(fast == oracle::brute_dyck(m, n));
      CHECK(BigInt(fast.size()) == oracle::fuss_catalan(m, n));
    }
  }
  CHECK(enumerate_dyck(2, 3).size() == 12);
  CHECK_THROWS_AS(enumerate_dyck(1, 17), Error);
}

TEST_CASE("lattice path") {
  CHECK(vector_to_lattice_path(MVector{1, {0, 1, 0}}) == "URUU");
  CHECK(vector_to_lattice_path(MVector{2, {0, 0, 2, 0}}) == "UURRUU");
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; m * n <= 9; ++n) {
      for (const MVector& v : oracle::brute_dyck(m, n)) {
        CHECK(path_stays_above_diagonal(m, vector_to_lattice_path(v)));
      }
    }
  }
  // Both readings of the Dyck condition agree on every vector, Dyck or not.
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (int c = 0; c <= 2; ++c) {
        for (int d = 0; d <= 2; ++d) {
          const MVector v{2, {a, b, c, d}};
          CHECK(is_dyck(v) == path_stays_above_diagonal(2, vector_to_lattice_path(v)));
        }
      }
    }
  }
}

TEST_CASE("m-compositions") {
  CHECK(is_m_composition(MVector{2, {0, 1, 0, 1}}));
  CHECK_FALSE(is_m_composition(MVector{2, {1, 0, 0, 1}}));
  CHECK_FALSE(is_m_composition(MVector{2, {0, 0, 1, 0}}));
  CHECK_FALSE(is_m_composition(MVector{2, {1, 0, 0, 0}}));
  CHECK(is_m_composition(MVector{1, {1, 2}}));
  CHECK_FALSE(is_m_composition(MVector{1, {1, 0}}));
  // m = 1: ordinary compositions of 4 into 2 parts.
  CHECK(compositions_of(1, 2, 4).size() == 3);
  CHECK(compositions_of(2, 1, 2) == std::vector<MVector>{{2, {0, 2}}, {2, {1, 1}}, {2, {2, 0}}});
  for (int m = 1; m <= 3; ++m) {
    for (int size = 1; size <= 3; ++size) {
      for (int total = 0; total <= 4; ++total) {
        for (const MVector& c : compositions_of(m, size, total)) {
          CHECK(c.size() == size);
          CHECK(c.total() == total);
          CHECK(is_m_composition(c));
        }
      }
    }
  }
}

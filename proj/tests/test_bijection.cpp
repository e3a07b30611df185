#include <doctest.h>

#include <set>

#include "mang/bijection.hpp"
#include "mang/error.hpp"
#include "mang/sweeps.hpp"
#include "oracles.hpp"

using namespace mang;

namespace {

Dissection sixteen_gon() { return Dissection(2, 7, {{7, 10}, {6, 11}, {4, 11}, {2, 11}, {12, 15}, {0, 11}}); }

ErrorKind kind_of_psi(const MVector& v) {
  try {
    psi(v);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("psi accepted a bad vector");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("phi examples") {
  CHECK(phi(make_q0(2, 4)) == MVector{2, std::vector<int>(8, 0)});
  CHECK(phi(sixteen_gon()) == MVector{2, {0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 0, 0, 0, 1}});
  CHECK(phi(Dissection(2, 2, {{1, 4}})) == MVector{2, {0, 0, 1, 0}});
  CHECK(phi(make_q0(1, 1)) == MVector{1, {0}});
}

TEST_CASE("psi examples") {
  CHECK(psi(MVector{2, {0, 0, 0, 0, 0, 0}}) == make_q0(2, 3));
  CHECK(psi(MVector{2, {0, 0, 1, 0}}) == Dissection(2, 2, {{1, 4}}));
  CHECK(psi(MVector{2, {0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 0, 0, 0, 1}}) == sixteen_gon());
  std::vector<FanStep> trace;
  const MVector v{2, {0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 0, 0, 0, 1}};
  psi(v, &trace);
  CHECK(trace.size() == 3);
  CHECK_FALSE(fan_trace_violation(v, trace).has_value());
  for (const FanStep& step : trace) {
    for (int s : step.starts) {
      CHECK(s > 0);
      CHECK(s < step.end);
    }
  }
}

TEST_CASE("psi rejects bad input") {
  CHECK(kind_of_psi(MVector{2, {0, 1, 0, 0}}) == ErrorKind::ConstructionStuck);
  CHECK(kind_of_psi(MVector{1, {2, 0, 0}}) == ErrorKind::ConstructionStuck);
  CHECK(kind_of_psi(MVector{2, {0, 0, 1}}) == ErrorKind::InvalidArgument);
}

TEST_CASE("round trips") {
  for (auto [m, n] : {std::pair{2, 3}, std::pair{1, 4}, std::pair{3, 3}, std::pair{4, 2}, std::pair{1, 7}}) {
    std::set<MVector> images;
    for (const Dissection& q : enumerate_dissections(m, n)) {
      const MVector v = phi(q);
      CHECK(is_dyck(v));
      CHECK(psi(v) == q);
      images.insert(v);
    }
    const auto dyck = oracle::brute_dyck(m, n);
    CHECK(images == std::set<MVector>(dyck.begin(), dyck.end()));
    for (const MVector& v : dyck) {
      std::vector<FanStep> trace;
      CHECK(phi(psi(v, &trace)) == v);
      CHECK_FALSE(fan_trace_violation(v, trace).has_value());
    }
  }
}

TEST_CASE("a tampered trace is caught") {
  const MVector v{2, {0, 0, 1, 0}};
  std::vector<FanStep> trace;
  psi(v, &trace);
  REQUIRE_FALSE(trace.empty());
  trace.front().visible_before_first_start += 1;
  CHECK(fan_trace_violation(v, trace).has_value());
}

TEST_CASE("psi gets stuck on every small non-Dyck vector") {
  for (auto [m, n] : {std::pair{2, 3}, std::pair{1, 4}, std::pair{3, 2}}) {
    const int len = m * n;
    MVector v{m, std::vector<int>(len, 0)};
    int stuck = 0;
    // Entries 0..n-1, so every candidate has a chance to place its fans.
    for (long code = 0;; ++code) {
      long c = code;
      for (int i = 0; i < len; ++i, c /= n) v.entries[i] = static_cast<int>(c % n);
      if (c > 0) break;
      if (is_dyck(v)) continue;
      CHECK(kind_of_psi(v) == ErrorKind::ConstructionStuck);
      ++stuck;
    }
    CHECK(stuck > 0);
  }
}

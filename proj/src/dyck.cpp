#include "mang/dyck.hpp"

#include <numeric>

#include "mang/error.hpp"

namespace mang {

int MVector::total() const { return std::accumulate(entries.begin(), entries.end(), 0); }

void validate(const MVector& v) {
  if (v.m < 1 || v.entries.size() % static_cast<std::size_t>(v.m) != 0) {
    throw Error(ErrorKind::InvalidArgument, "m-vector length must be a multiple of m");
  }
  for (int e : v.entries) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "m-vector entries must be nonnegative");
  }
}

std::vector<int> weight(const MVector& v) {
  std::vector<int> w(v.m, 0);
  for (std::size_t i = 0; i < v.entries.size(); ++i) w[i % v.m] += v.entries[i];
  return w;
}

bool is_m_composition(const MVector& v) {
  int run = 0;
  for (int e : v.entries) {
    run = e == 0 ? run + 1 : 0;
    if (run >= v.m) return false;
  }
  return true;
}

bool is_dyck(const MVector& v) {
  long prefix = 0;
  for (std::size_t l = 1; l <= v.entries.size(); ++l) {
    prefix += v.entries[l - 1];
    if (static_cast<long>(v.m) * prefix >= static_cast<long>(l)) return false;
  }
  return true;
}

std::vector<MVector> enumerate_dyck(int m, int n, const Limits& limits) {
  check_guard(m, n, limits.enumerate_mn, "enumerate_dyck");
  std::vector<MVector> out;
  MVector cur{m, std::vector<int>(m * n, 0)};
  // Entry l may be raised while m * prefix_l < l; larger entries only make
  // later prefixes worse, so the search below emits exactly the Dyck vectors.
  auto fill = [&](auto&& self, int pos, int prefix) -> void {
    if (pos == m * n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; m * (prefix + e) < pos + 1; ++e) {
      cur.entries[pos] = e;
      self(self, pos + 1, prefix + e);
    }
    cur.entries[pos] = 0;
  };
  fill(fill, 0, 0);
  return out;
}

std::string vector_to_lattice_path(const MVector& v) {
  std::string path;
  for (int e : v.entries) {
    path.append(static_cast<std::size_t>(e), 'R');
    path.push_back('U');
  }
  return path;
}

bool path_stays_above_diagonal(int m, const std::string& path) {
  // Right steps are (m, 0), up steps (0, 1); every visited lattice point
  // must satisfy x <= y.
  long x = 0, y = 0;
  for (char step : path) {
    if (step == 'R') {
      x += m;
    } else {
      ++y;
    }
    if (x > y) return false;
  }
  return true;
}

std::vector<MVector> compositions_of(int m, int size, int total) {
  std::vector<MVector> out;
  MVector cur{m, std::vector<int>(m * size, 0)};
  auto fill = [&](auto&& self, int pos, int left, int zero_run) -> void {
    if (pos == m * size) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      int run = e == 0 ? zero_run + 1 : 0;
      if (run >= m) continue;
      cur.entries[pos] = e;
      self(self, pos + 1, left - e, run);
    }
    cur.entries[pos] = 0;
  };
  fill(fill, 0, total, 0);
  return out;
}

}  // namespace mang

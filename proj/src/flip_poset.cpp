#include "mang/flip_poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "mang/error.hpp"

namespace mang {

int FinitePoset::index_of(const Dissection& q) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), q);
  if (it == elements.end() || *it != q) return -1;
  return static_cast<int>(it - elements.begin());
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (covers[i].empty()) out.push_back(i);
  }
  return out;
}

FinitePoset build_poset(int m, int n, const Limits& limits) {
  // Reachability is stored densely, so the poset uses the tighter cap.
  check_guard(m, n, limits.interval_mn, "build_poset");
  FinitePoset p;
  p.m = m;
  p.n = n;
  p.elements = enumerate_dissections(m, n, limits);
  const int size = p.size();
  p.covers.assign(size, {});
  p.covered.assign(size, {});
  p.ranks.resize(size);
  for (int i = 0; i < size; ++i) {
    const Dissection& q = p.elements[i];
    p.ranks[i] = rank(q);
    for (const Chord& d : q.diagonals()) {
      if (!is_q0_diagonal(m, n, d)) continue;
      for (const Dissection& up : flip_up(q, d)) {
        int j = p.index_of(up);
        if (j < 0) throw Error(ErrorKind::MalformedDissection, "flip left the poset: " + up.to_string());
        p.covers[i].push_back(j);
        p.covered[j].push_back(i);
      }
    }
  }
  for (auto& c : p.covers) std::sort(c.begin(), c.end());
  for (auto& c : p.covered) std::sort(c.begin(), c.end());

  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return p.ranks[x] < p.ranks[y]; });
  p.up.assign(size, Bits(size));
  p.down.assign(size, Bits(size));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int i = *it;
    p.up[i].set(i);
    for (int c : p.covers[i]) p.up[i] |= p.up[c];
  }
  for (int i : order) {
    p.down[i].set(i);
    for (int c : p.covered[i]) p.down[i] |= p.down[c];
  }
  return p;
}

bool rank_is_consistent(const FinitePoset& poset) {
  const int bottom = poset.minimum();
  if (bottom < 0 || poset.ranks[bottom] != 0) return false;
  std::vector<int> dist(poset.size(), -1);
  std::queue<int> queue;
  dist[bottom] = 0;
  queue.push(bottom);
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop();
    for (int c : poset.covers[i]) {
      if (poset.ranks[c] != poset.ranks[i] + 1) return false;
      if (dist[c] < 0) {
        dist[c] = dist[i] + 1;
        queue.push(c);
      }
    }
  }
  for (int i = 0; i < poset.size(); ++i) {
    if (dist[i] != poset.ranks[i]) return false;
  }
  return poset.up[bottom].all();
}

CheckResult cover_count_check(const FinitePoset& poset) {
  for (int i = 0; i < poset.size(); ++i) {
    int expected = poset.m * (poset.n - 1 - poset.ranks[i]);
    if (static_cast<int>(poset.covers[i].size()) != expected) {
      return CheckResult::fail(poset.elements[i], "has " + std::to_string(poset.covers[i].size()) +
                                                      " covers, expected " + std::to_string(expected));
    }
  }
  return {};
}

BigInt maximal_chain_count(const FinitePoset& poset) {
  std::vector<int> order(poset.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return poset.ranks[x] > poset.ranks[y]; });
  std::vector<BigInt> chains(poset.size());
  for (int i : order) {
    if (poset.covers[i].empty()) {
      chains[i] = 1;
    } else {
      for (int c : poset.covers[i]) chains[i] += chains[c];
    }
  }
  return chains[poset.minimum()];
}

Chord lemma_descent_witness(const Dissection& q) {
  if (q == make_q0(q.m(), q.n())) {
    throw Error(ErrorKind::InvalidArgument, "lemma_descent_witness: Q is Q0");
  }
  for (int k = 1; k < q.n(); ++k) {
    Chord d0 = q0_diagonal(q.m(), k);
    auto crossings = std::count_if(q.diagonals().begin(), q.diagonals().end(),
                                   [&](Chord d) { return chords_cross(d0, d); });
    if (crossings == 1) return d0;
  }
  throw Error(ErrorKind::NoWitness, "no Q0 diagonal crosses exactly one diagonal of " + q.to_string());
}

Dissection lemma_descent_step(const Dissection& q) {
  Chord d0 = lemma_descent_witness(q);
  std::vector<Chord> chords;
  for (const Chord& d : q.diagonals()) {
    if (!chords_cross(d0, d)) chords.push_back(d);
  }
  chords.push_back(d0);
  return Dissection(q.m(), q.n(), std::move(chords));
}

Interval make_interval(const FinitePoset& poset, int bottom, int top) {
  if (bottom < 0 || top < 0 || bottom >= poset.size() || top >= poset.size() ||
      !poset.leq(bottom, top)) {
    throw Error(ErrorKind::InvalidArgument, "make_interval: bottom is not below top");
  }
  Interval out{bottom, top, {}};
  Bits span = poset.up[bottom] & poset.down[top];
  for (auto i = span.find_first(); i != Bits::npos; i = span.find_next(i)) {
    out.elements.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<long long> mobius_from(const FinitePoset& poset, int a) {
  std::vector<int> order;
  for (auto i = poset.up[a].find_first(); i != Bits::npos; i = poset.up[a].find_next(i)) {
    order.push_back(static_cast<int>(i));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return poset.ranks[x] < poset.ranks[y]; });
  std::vector<long long> mu(poset.size(), 0);
  mu[a] = 1;
  for (int z : order) {
    if (z == a) continue;
    Bits below = poset.up[a] & poset.down[z];
    long long sum = 0;
    for (auto y = below.find_first(); y != Bits::npos; y = below.find_next(y)) {
      if (static_cast<int>(y) != z) sum += mu[y];
    }
    mu[z] = -sum;
  }
  return mu;
}

long long mobius(const FinitePoset& poset, const Interval& interval) {
  return mobius_from(poset, interval.bottom)[interval.top];
}

IntervalDecomposition interval_decompose(const Dissection& bottom, const Dissection& top) {
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::DecompositionFailure,
                 "[" + bottom.to_string() + ", " + top.to_string() + "]: " + why);
  };
  std::vector<Dissection> parts = cut_L(bottom);
  const int k = static_cast<int>(parts.size());
  const std::vector<int> hull = apex_hull(parts);
  if (static_cast<int>(hull.size()) != bottom.m() * k + 2) throw fail("apex hull has the wrong size");
  auto local = [&](int v) -> int {
    auto it = std::lower_bound(hull.begin(), hull.end(), v);
    return (it != hull.end() && *it == v) ? static_cast<int>(it - hull.begin()) : -1;
  };
  std::vector<Chord> inner;
  for (const Chord& c : top.diagonals()) {
    int a = local(c.a), b = local(c.b);
    if (a < 0 || b < 0 || b - a < 2) continue;  // outside the hull, or one of its sides
    inner.push_back({a, b});
  }
  std::optional<Dissection> b0;
  try {
    b0.emplace(bottom.m(), k, std::move(inner));
  } catch (const Error& e) {
    throw fail(std::string("no M-angulation of the apex hull: ") + e.what());
  }
  if (glue_G(*b0, parts) != top) throw fail("top is not G(B0; parts)");
  if (glue_G(make_q0(bottom.m(), k), parts) != bottom) throw fail("bottom is not G(Q0; parts)");
  return {std::move(*b0), std::move(parts)};
}

unsigned long long count_order_ideals(const ForestPoset& forest) {
  const std::size_t size = forest.nodes.size();
  std::vector<std::vector<int>> children(size);
  std::vector<int> roots;
  for (std::size_t i = 0; i < size; ++i) {
    if (forest.parent[i] < 0) {
      roots.push_back(static_cast<int>(i));
    } else {
      children[forest.parent[i]].push_back(static_cast<int>(i));
    }
  }
  // An ideal of a rooted tree either omits the root (any ideals of the
  // subtrees) or is the whole tree.
  auto count = [&](auto&& self, int v) -> unsigned long long {
    unsigned long long product = 1;
    for (int c : children[v]) product *= self(self, c);
    return product + 1;
  };
  unsigned long long total = 1;
  for (int r : roots) total *= count(count, r);
  return total;
}

namespace {

constexpr std::size_t kMaxJoinIrreducibles = 64;

// Parent of each node in the order induced on `nodes`, or an error message
// when some node is below two incomparable nodes.
std::string induced_forest(const std::vector<int>& nodes,
                           const std::function<bool(int, int)>& leq, std::vector<int>& parent) {
  const std::size_t size = nodes.size();
  parent.assign(size, -1);
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < size; ++j) {
      if (j != i && leq(nodes[i], nodes[j])) above.push_back(j);
    }
    for (std::size_t x = 0; x < above.size(); ++x) {
      for (std::size_t y = x + 1; y < above.size(); ++y) {
        if (!leq(nodes[above[x]], nodes[above[y]]) && !leq(nodes[above[y]], nodes[above[x]])) {
          return "join-irreducible covered by two incomparable elements";
        }
      }
    }
    for (std::size_t cand : above) {
      bool least = std::all_of(above.begin(), above.end(),
                               [&](std::size_t o) { return leq(nodes[cand], nodes[o]); });
      if (least) parent[i] = static_cast<int>(cand);
    }
  }
  return {};
}

}  // namespace

IntervalStructure analyze_interval(const FinitePoset& poset, const Interval& interval) {
  IntervalStructure out;
  const auto& elems = interval.elements;
  const Bits& above_bottom = poset.up[interval.bottom];

  std::vector<int> join_irr;
  for (int z : elems) {
    int inside = 0;
    for (int c : poset.covered[z]) inside += above_bottom[c] ? 1 : 0;
    if (inside == 1) join_irr.push_back(z);
  }
  if (join_irr.size() > kMaxJoinIrreducibles) {
    out.failure = "more than 64 join-irreducibles";
    return out;
  }
  out.forest.nodes = join_irr;
  out.failure = induced_forest(join_irr, [&](int x, int y) { return poset.leq(x, y); },
                               out.forest.parent);
  if (!out.failure.empty()) return out;
  out.join_irreducibles_form_forest = true;
  out.ideal_count = count_order_ideals(out.forest);
  if (out.ideal_count != elems.size()) {
    out.failure = "interval has " + std::to_string(elems.size()) + " elements but the forest has " +
                  std::to_string(out.ideal_count) + " ideals";
    return out;
  }

  const std::size_t nj = join_irr.size();
  std::vector<std::uint64_t> below_j(nj, 0);
  for (std::size_t i = 0; i < nj; ++i) {
    for (std::size_t j = 0; j < nj; ++j) {
      if (poset.leq(join_irr[j], join_irr[i])) below_j[i] |= std::uint64_t{1} << j;
    }
  }
  std::vector<std::uint64_t> mask(elems.size(), 0);
  for (std::size_t e = 0; e < elems.size(); ++e) {
    for (std::size_t j = 0; j < nj; ++j) {
      if (poset.leq(join_irr[j], elems[e])) mask[e] |= std::uint64_t{1} << j;
    }
    for (std::size_t j = 0; j < nj; ++j) {
      if (((mask[e] >> j) & 1u) && (below_j[j] & ~mask[e])) {
        out.failure = "mask of an element is not an order ideal";
        return out;
      }
    }
  }
  std::vector<std::uint64_t> sorted = mask;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    out.failure = "two elements share the same join-irreducibles";
    return out;
  }
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t y = 0; y < elems.size(); ++y) {
      bool subset = (mask[x] & ~mask[y]) == 0;
      if (subset != poset.leq(elems[x], elems[y])) {
        out.failure = "join-irreducible masks do not reflect the order";
        return out;
      }
    }
  }
  out.is_lattice = true;
  out.is_distributive = true;
  return out;
}

IntervalStructure interval_structure(const FinitePoset& poset, const Interval& interval) {
  IntervalStructure s = analyze_interval(poset, interval);
  if (!s.failure.empty()) {
    throw Error(ErrorKind::StructureViolation,
                "[" + poset.elements[interval.bottom].to_string() + ", " +
                    poset.elements[interval.top].to_string() + "]: " + s.failure);
  }
  return s;
}

IntervalStructure analyze_interval_reference(const FinitePoset& poset, const Interval& interval) {
  IntervalStructure out;
  const auto& elems = interval.elements;
  const std::size_t s = elems.size();
  std::vector<std::vector<char>> leq(s, std::vector<char>(s, 0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) leq[i][j] = poset.leq(elems[i], elems[j]) ? 1 : 0;
  }
  auto least_of = [&](const std::vector<std::size_t>& set) -> long {
    for (std::size_t c : set) {
      if (std::all_of(set.begin(), set.end(), [&](std::size_t o) { return leq[c][o]; })) return static_cast<long>(c);
    }
    return -1;
  };
  auto greatest_of = [&](const std::vector<std::size_t>& set) -> long {
    for (std::size_t c : set) {
      if (std::all_of(set.begin(), set.end(), [&](std::size_t o) { return leq[o][c]; })) return static_cast<long>(c);
    }
    return -1;
  };
  std::vector<std::vector<long>> join(s, std::vector<long>(s, -1)), meet = join;
  bool lattice = true;
  for (std::size_t x = 0; x < s && lattice; ++x) {
    for (std::size_t y = 0; y < s; ++y) {
      std::vector<std::size_t> upper, lower;
      for (std::size_t z = 0; z < s; ++z) {
        if (leq[x][z] && leq[y][z]) upper.push_back(z);
        if (leq[z][x] && leq[z][y]) lower.push_back(z);
      }
      join[x][y] = least_of(upper);
      meet[x][y] = greatest_of(lower);
      if (join[x][y] < 0 || meet[x][y] < 0) {
        lattice = false;
        break;
      }
    }
  }
  out.is_lattice = lattice;
  if (!lattice) {
    out.failure = "some pair has no join or meet inside the interval";
    return out;
  }
  bool distributive = true;
  for (std::size_t x = 0; x < s && distributive; ++x) {
    for (std::size_t y = 0; y < s && distributive; ++y) {
      for (std::size_t z = 0; z < s; ++z) {
        if (meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]) {
          distributive = false;
          break;
        }
      }
    }
  }
  out.is_distributive = distributive;
  if (!distributive) {
    out.failure = "distributive law fails";
    return out;
  }
  // Lower covers computed from the local order, not from the cover lists.
  std::vector<int> join_irr;
  for (std::size_t z = 0; z < s; ++z) {
    int lower_covers = 0;
    for (std::size_t y = 0; y < s; ++y) {
      if (y == z || !leq[y][z]) continue;
      bool cover = true;
      for (std::size_t w = 0; w < s && cover; ++w) {
        if (w != y && w != z && leq[y][w] && leq[w][z]) cover = false;
      }
      lower_covers += cover ? 1 : 0;
    }
    if (lower_covers == 1) join_irr.push_back(elems[z]);
  }
  out.forest.nodes = join_irr;
  out.failure = induced_forest(join_irr, [&](int x, int y) { return poset.leq(x, y); },
                               out.forest.parent);
  if (!out.failure.empty()) return out;
  out.join_irreducibles_form_forest = true;
  if (join_irr.size() > 24) {
    out.failure = "too many join-irreducibles for subset enumeration";
    return out;
  }
  unsigned long long ideals = 0;
  const std::size_t nj = join_irr.size();
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << nj); ++subset) {
    bool closed = true;
    for (std::size_t i = 0; i < nj && closed; ++i) {
      if (!((subset >> i) & 1u)) continue;
      for (std::size_t j = 0; j < nj; ++j) {
        if (!((subset >> j) & 1u) && poset.leq(join_irr[j], join_irr[i])) {
          closed = false;
          break;
        }
      }
    }
    ideals += closed ? 1 : 0;
  }
  out.ideal_count = ideals;
  if (ideals != s) out.failure = "ideal count differs from interval size";
  return out;
}

CheckResult width_cover_check(const FinitePoset& poset) {
  for (int i = 0; i < poset.size(); ++i) {
    const Dissection& q = poset.elements[i];
    if (!is_final(q)) continue;
    int width = width_and_blocks(q).width;
    if (static_cast<int>(poset.covered[i].size()) != width) {
      return CheckResult::fail(q, "covers " + std::to_string(poset.covered[i].size()) +
                                      " elements but has width " + std::to_string(width));
    }
  }
  return {};
}

CheckResult upper_ideal_iso_check(const FinitePoset& poset, const FinitePoset& small, int a_minus) {
  const Dissection& bottom = poset.elements[a_minus];
  const std::vector<Dissection> parts = cut_L(bottom);
  if (small.m != poset.m || small.n != static_cast<int>(parts.size())) {
    throw Error(ErrorKind::InvalidArgument, "upper_ideal_iso_check: wrong reference poset");
  }
  std::vector<int> image(small.size());
  Bits hit(poset.size());
  for (int i = 0; i < small.size(); ++i) {
    int j = poset.index_of(glue_G(small.elements[i], parts));
    if (j < 0 || hit[j] || !poset.leq(a_minus, j)) {
      return CheckResult::fail(bottom, "glue_G image is not a bijection onto the up-set");
    }
    hit.set(j);
    image[i] = j;
  }
  if (hit != poset.up[a_minus]) return CheckResult::fail(bottom, "glue_G image misses part of the up-set");
  for (int i = 0; i < small.size(); ++i) {
    std::vector<int> mapped;
    for (int c : small.covers[i]) mapped.push_back(image[c]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != poset.covers[image[i]]) {
      return CheckResult::fail(bottom, "covers are not preserved by glue_G");
    }
  }
  return {};
}

CheckResult upper_ideal_iso_check(const FinitePoset& poset, int a_minus, const Limits& limits) {
  const int k = static_cast<int>(cut_L(poset.elements[a_minus]).size());
  return upper_ideal_iso_check(poset, build_poset(poset.m, k, limits), a_minus);
}

DegreeProfile degree_profile(const FinitePoset& poset, const Interval& interval) {
  DegreeProfile out;
  const Bits& above_bottom = poset.up[interval.bottom];
  const Bits& below_top = poset.down[interval.top];
  for (int z : interval.elements) {
    int lower = 0, upper = 0;
    for (int c : poset.covered[z]) lower += above_bottom[c] ? 1 : 0;
    for (int c : poset.covers[z]) upper += below_top[c] ? 1 : 0;
    ++out[{lower, upper}];
  }
  return out;
}

DegreeProfile product_profile(const DegreeProfile& x, const DegreeProfile& y) {
  DegreeProfile out;
  for (const auto& [dx, cx] : x) {
    for (const auto& [dy, cy] : y) out[{dx.first + dy.first, dx.second + dy.second}] += cx * cy;
  }
  return out;
}

bool is_lattice(const FinitePoset& poset) {
  const int size = poset.size();
  auto has_least = [&](const Bits& set) {
    for (auto c = set.find_first(); c != Bits::npos; c = set.find_next(c)) {
      if (set.is_subset_of(poset.up[c])) return true;
    }
    return false;
  };
  auto has_greatest = [&](const Bits& set) {
    for (auto c = set.find_first(); c != Bits::npos; c = set.find_next(c)) {
      if (set.is_subset_of(poset.down[c])) return true;
    }
    return false;
  };
  for (int x = 0; x < size; ++x) {
    for (int y = x + 1; y < size; ++y) {
      if (!has_least(poset.up[x] & poset.up[y])) return false;
      if (!has_greatest(poset.down[x] & poset.down[y])) return false;
    }
  }
  return true;
}

}  // namespace mang

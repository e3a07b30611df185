#include "mang/dissection.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mang/error.hpp"

namespace mang {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorKind::MalformedDissection, why);
}

// Region whose "top" edge is (a, b), walking along the side a..b.
Region region_below(const std::vector<std::vector<int>>& partners, int a, int b) {
  Region region{a};
  int w = a;
  while (w != b) {
    int next = w + 1;
    // partners[w] is sorted descending; the widest chord under (a, b) hides
    // everything it encloses.
    for (int c : partners[w]) {
      if (c < b || (c == b && w != a)) {
        next = c;
        break;
      }
    }
    w = next;
    region.push_back(w);
  }
  return region;
}

std::vector<std::vector<int>> partner_lists(int vertex_count, std::span<const Chord> chords) {
  std::vector<std::vector<int>> partners(vertex_count);
  for (const Chord& c : chords) partners[c.a].push_back(c.b);
  for (auto& p : partners) std::sort(p.begin(), p.end(), std::greater<>());
  return partners;
}

const Region& apex_region(const std::vector<Region>& rs) {
  // Regions are sorted, so the ones containing 0 come first; a final
  // dissection has exactly one.
  return rs.front();
}

void require_final(const Dissection& q, const char* what) {
  if (!is_final(q)) {
    throw Error(ErrorKind::NotFinal, std::string(what) + ": " + q.to_string() + " is not final");
  }
}

// Chords of q with both endpoints in [lo, hi], other than (lo, hi) itself,
// shifted so that `lo` lands on `origin`.
std::vector<Chord> chords_within(const Dissection& q, int lo, int hi, int origin) {
  std::vector<Chord> out;
  for (const Chord& c : q.diagonals()) {
    if (c.a >= lo && c.b <= hi && !(c.a == lo && c.b == hi)) {
      out.push_back({c.a - lo + origin, c.b - lo + origin});
    }
  }
  return out;
}

}  // namespace

Dissection::Dissection(int m, int n, std::vector<Chord> diagonals)
    : m_(m), n_(n), diagonals_(std::move(diagonals)) {
  if (m < 1 || n < 1) malformed("m and n must be >= 1");
  const int vc = vertex_count();
  std::sort(diagonals_.begin(), diagonals_.end());
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end()) {
    malformed("duplicate diagonal in " + to_string());
  }
  if (static_cast<int>(diagonals_.size()) != n - 1) {
    malformed("expected " + std::to_string(n - 1) + " diagonals, got " +
              std::to_string(diagonals_.size()));
  }
  for (const Chord& c : diagonals_) {
    if (c.a < 0 || c.b >= vc || c.b - c.a < 2 || (c.a == 0 && c.b == vc - 1)) {
      malformed("(" + std::to_string(c.a) + "," + std::to_string(c.b) +
                ") is not a diagonal of the " + std::to_string(vc) + "-gon");
    }
  }
  for (const auto& region : regions_of(vc, diagonals_)) {
    if (static_cast<int>(region.size()) != m + 2) {
      malformed("region of size " + std::to_string(region.size()) + " in " + to_string());
    }
  }
}

Dissection Dissection::trusted(int m, int n, std::vector<Chord> sorted_diagonals) {
  Dissection d;
  d.m_ = m;
  d.n_ = n;
  d.diagonals_ = std::move(sorted_diagonals);
  return d;
}

bool Dissection::contains(Chord c) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), c);
}

std::strong_ordering operator<=>(const Dissection& x, const Dissection& y) {
  if (auto c = x.m_ <=> y.m_; c != 0) return c;
  if (auto c = x.n_ <=> y.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(x.diagonals_.begin(), x.diagonals_.end(),
                                                y.diagonals_.begin(), y.diagonals_.end());
}

std::string Dissection::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < diagonals_.size(); ++i) {
    if (i) os << ',';
    os << '[' << diagonals_[i].a << ',' << diagonals_[i].b << ']';
  }
  os << ']';
  return os.str();
}

std::size_t DissectionHash::operator()(const Dissection& d) const noexcept {
  std::size_t h = static_cast<std::size_t>(d.m()) * 1000003u + static_cast<std::size_t>(d.n());
  for (const Chord& c : d.diagonals()) {
    h ^= static_cast<std::size_t>(c.a * 131 + c.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Region> regions_of(int vertex_count, std::span<const Chord> chords) {
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (chords_cross(chords[i], chords[j])) malformed("crossing diagonals");
    }
  }
  for (const Chord& c : chords) {
    if (c.a < 0 || c.b >= vertex_count || c.a >= c.b) malformed("chord outside the polygon");
  }
  auto partners = partner_lists(vertex_count, chords);
  std::vector<Region> out;
  out.reserve(chords.size() + 1);
  out.push_back(region_below(partners, 0, vertex_count - 1));
  for (const Chord& c : chords) out.push_back(region_below(partners, c.a, c.b));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Region> regions(const Dissection& q) {
  auto partners = partner_lists(q.vertex_count(), q.diagonals());
  std::vector<Region> out;
  out.reserve(q.n());
  out.push_back(region_below(partners, 0, q.vertex_count() - 1));
  for (const Chord& c : q.diagonals()) out.push_back(region_below(partners, c.a, c.b));
  std::sort(out.begin(), out.end());
  return out;
}

Dissection make_q0(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "make_q0: m and n must be >= 1");
  std::vector<Chord> chords;
  for (int k = 1; k < n; ++k) chords.push_back(q0_diagonal(m, k));
  return Dissection::trusted(m, n, std::move(chords));
}

unsigned long long fuss_catalan(int m, int n) {
  // binom((m+1)n, n) / (mn+1), built incrementally so every step is exact.
  unsigned __int128 binom = 1;
  const int top = (m + 1) * n;
  for (int i = 1; i <= n; ++i) binom = binom * static_cast<unsigned>(top - n + i) / static_cast<unsigned>(i);
  return static_cast<unsigned long long>(binom / static_cast<unsigned>(m * n + 1));
}

namespace {

using ChordLists = std::vector<std::vector<Chord>>;

// All M-angulations of the polygon 0..len with root side (0, len), as chord
// lists relative to vertex 0.  Memoized by len.
const ChordLists& dissections_of_range(int m, int len, std::map<int, ChordLists>& memo) {
  if (auto it = memo.find(len); it != memo.end()) return it->second;
  ChordLists result;
  if (len == 1) {
    result.push_back({});
  } else {
    // The root region is 0 = a_0 < a_1 < ... < a_{m+1} = len with every gap
    // a_{i+1} - a_i congruent to 1 mod m.
    std::vector<int> corners{0};
    std::vector<ChordLists> sub;
    auto place = [&](auto&& self, int count) -> void {
      int cur = corners.back();
      if (count == m + 1) {
        if (cur != len) return;
        // Cartesian product of the sub-dissections of each gap.
        std::vector<const ChordLists*> gaps;
        for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
          gaps.push_back(&dissections_of_range(m, corners[i + 1] - corners[i], memo));
        }
        std::vector<std::size_t> pick(gaps.size(), 0);
        while (true) {
          std::vector<Chord> chords;
          for (std::size_t i = 0; i < gaps.size(); ++i) {
            int lo = corners[i], hi = corners[i + 1];
            if (hi - lo >= 2 && !(lo == 0 && hi == len)) chords.push_back({lo, hi});
            for (const Chord& c : (*gaps[i])[pick[i]]) chords.push_back({c.a + lo, c.b + lo});
          }
          result.push_back(std::move(chords));
          std::size_t i = 0;
          while (i < gaps.size() && ++pick[i] == gaps[i]->size()) pick[i++] = 0;
          if (i == gaps.size()) break;
        }
        return;
      }
      int remaining = m + 1 - count;  // corners still to place, last one is len
      for (int next = cur + 1; next <= len - (remaining - 1); next += m) {
        corners.push_back(next);
        self(self, count + 1);
        corners.pop_back();
      }
    };
    place(place, 0);
  }
  return memo.emplace(len, std::move(result)).first->second;
}

}  // namespace

std::vector<Dissection> enumerate_dissections(int m, int n, const Limits& limits) {
  check_guard(m, n, limits.enumerate_mn, "enumerate_dissections");
  std::map<int, ChordLists> memo;
  const ChordLists& lists = dissections_of_range(m, m * n + 1, memo);
  std::vector<Dissection> out;
  out.reserve(lists.size());
  for (const auto& chords : lists) {
    std::vector<Chord> sorted = chords;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(Dissection::trusted(m, n, std::move(sorted)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_final(const Dissection& q) {
  return std::none_of(q.diagonals().begin(), q.diagonals().end(),
                      [&](Chord c) { return is_q0_diagonal(q.m(), q.n(), c); });
}

int rank(const Dissection& q) {
  return static_cast<int>(std::count_if(q.diagonals().begin(), q.diagonals().end(), [&](Chord c) {
    return !is_q0_diagonal(q.m(), q.n(), c);
  }));
}

std::vector<Dissection> flip_up(const Dissection& q, Chord d) {
  const int m = q.m();
  if (!is_q0_diagonal(m, q.n(), d) || !q.contains(d)) {
    throw Error(ErrorKind::NotAQ0Diagonal, "(" + std::to_string(d.a) + "," + std::to_string(d.b) +
                                               ") is not a shared diagonal of " + q.to_string());
  }
  std::vector<int> merged;
  for (const Region& r : regions(q)) {
    bool has_a = std::binary_search(r.begin(), r.end(), d.a);
    bool has_b = std::binary_search(r.begin(), r.end(), d.b);
    if (has_a && has_b) merged.insert(merged.end(), r.begin(), r.end());
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  // merged is the (2m+2)-gon left by removing d.
  std::vector<Dissection> out;
  out.reserve(m);
  for (int i = 0; i <= m; ++i) {
    Chord c{merged[i], merged[i + m + 1]};
    if (c == d) continue;
    std::vector<Chord> chords;
    for (const Chord& e : q.diagonals()) {
      if (e != d) chords.push_back(e);
    }
    chords.push_back(c);
    std::sort(chords.begin(), chords.end());
    out.push_back(Dissection::trusted(m, q.n(), std::move(chords)));
  }
  return out;
}

std::vector<Dissection> cut_L(const Dissection& q) {
  const int m = q.m();
  std::vector<int> cuts{1};
  for (const Chord& c : q.diagonals()) {
    if (c.a == 0) cuts.push_back(c.b);
  }
  cuts.push_back(q.vertex_count() - 1);
  std::vector<Dissection> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    int lo = cuts[i], hi = cuts[i + 1];
    auto chords = chords_within(q, lo, hi, 1);
    // (lo, hi) would be a diagonal of the piece, not a side.
    if (q.contains({lo, hi})) chords.push_back({1, hi - lo + 1});
    std::sort(chords.begin(), chords.end());
    pieces.push_back(Dissection::trusted(m, (hi - lo) / m, std::move(chords)));
  }
  return pieces;
}

namespace {

void check_parts(std::span<const Dissection> parts, const char* what) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": no parts");
  for (const Dissection& p : parts) {
    if (p.m() != parts.front().m()) {
      throw Error(ErrorKind::InvalidArgument, std::string(what) + ": parts disagree on m");
    }
    require_final(p, what);
  }
}

}  // namespace

Dissection glue_L(std::span<const Dissection> parts) {
  check_parts(parts, "glue_L");
  const int m = parts.front().m();
  std::vector<Chord> chords;
  int offset = 1;
  int n = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) chords.push_back({0, offset});
    for (const Chord& c : parts[i].diagonals()) chords.push_back({c.a + offset - 1, c.b + offset - 1});
    offset += m * parts[i].n();
    n += parts[i].n();
  }
  std::sort(chords.begin(), chords.end());
  return Dissection::trusted(m, n, std::move(chords));
}

std::vector<int> apex_hull(std::span<const Dissection> parts) {
  check_parts(parts, "apex_hull");
  std::vector<int> hull{0};
  int offset = 1;
  for (const Dissection& p : parts) {
    const Region r0 = apex_region(regions(p));
    for (int v : r0) {
      if (v != 0) hull.push_back(v + offset - 1);
    }
    offset += p.m() * p.n();
  }
  std::sort(hull.begin(), hull.end());
  hull.erase(std::unique(hull.begin(), hull.end()), hull.end());
  return hull;
}

Dissection glue_G(const Dissection& b0, std::span<const Dissection> parts) {
  check_parts(parts, "glue_G");
  if (b0.m() != parts.front().m() || b0.n() != static_cast<int>(parts.size())) {
    throw Error(ErrorKind::ArityMismatch, "glue_G: B0 has " + std::to_string(b0.n()) +
                                              " regions but " + std::to_string(parts.size()) +
                                              " parts were given");
  }
  Dissection base = glue_L(parts);
  std::vector<int> hull = apex_hull(parts);
  std::vector<Chord> chords;
  for (const Chord& c : base.diagonals()) {
    if (c.a != 0) chords.push_back(c);
  }
  for (const Chord& c : b0.diagonals()) chords.push_back({hull[c.a], hull[c.b]});
  std::sort(chords.begin(), chords.end());
  return Dissection::trusted(base.m(), base.n(), std::move(chords));
}

WidthAndBlocks width_and_blocks(const Dissection& q) {
  require_final(q, "width_and_blocks");
  const Region r0 = apex_region(regions(q));
  WidthAndBlocks out;
  for (std::size_t j = 1; j + 1 < r0.size(); ++j) {
    int lo = r0[j], hi = r0[j + 1];
    if (hi - lo < 2) continue;
    auto chords = chords_within(q, lo, hi, 0);
    std::sort(chords.begin(), chords.end());
    out.blocks.push_back(Dissection::trusted(q.m(), (hi - lo - 1) / q.m(), std::move(chords)));
  }
  out.width = static_cast<int>(out.blocks.size());
  return out;
}

Dissection single_block_final(const Dissection& q, int block) {
  require_final(q, "single_block_final");
  const Region r0 = apex_region(regions(q));
  int seen = 0;
  for (std::size_t j = 1; j + 1 < r0.size(); ++j) {
    int lo = r0[j], hi = r0[j + 1];
    if (hi - lo < 2) continue;
    if (seen++ != block) continue;
    std::vector<int> verts = r0;
    for (int v = lo + 1; v < hi; ++v) verts.push_back(v);
    std::sort(verts.begin(), verts.end());
    auto local = [&](int v) {
      return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<Chord> chords{{local(lo), local(hi)}};
    for (const Chord& c : q.diagonals()) {
      if (c.a >= lo && c.b <= hi && !(c.a == lo && c.b == hi)) chords.push_back({local(c.a), local(c.b)});
    }
    return Dissection(q.m(), (static_cast<int>(verts.size()) - 2) / q.m(), std::move(chords));
  }
  throw Error(ErrorKind::InvalidArgument, "single_block_final: no block " + std::to_string(block));
}

std::vector<Chord> apex_diagonal_set_D(const Dissection& q) {
  require_final(q, "apex_diagonal_set_D");
  const Region r0 = apex_region(regions(q));
  std::vector<Chord> out;
  for (std::size_t j = 2; j + 1 < r0.size(); ++j) out.push_back({0, r0[j]});
  return out;
}

}  // namespace mang

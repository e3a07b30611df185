#include "mang/bijection.hpp"

#include <algorithm>

#include "mang/error.hpp"
#include "mang/poly.hpp"

namespace mang {

MVector phi(const Dissection& q) {
  MVector v = monomial_to_vector(leading_monomial(poly_for_dissection(q)));
  if (!is_dyck(v)) throw Error(ErrorKind::NotDyck, "LM(P_Q) of " + q.to_string() + " is not Dyck");
  return v;
}

Dissection psi(const MVector& v, std::vector<FanStep>* trace) {
  validate(v);
  const int m = v.m;
  const int n = v.size();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "psi: empty m-vector");

  std::vector<Chord> added;
  // lowest_partner[b] = smallest a with (a, b) already added, or -1.
  std::vector<int> lowest_partner(m * n + 2, -1);

  for (int l = 1; l <= m * n; ++l) {
    const int c = v.entries[l - 1];
    if (c == 0) continue;
    const int letter = (l - 1) % m + 1;
    const int block = (l - 1) / m + 1;
    const int prev_letter = letter == 1 ? m : letter - 1;
    // First vertex with this letter after the end of Q0 diagonal block-1
    // (after the apex when block = 1); this is always vertex l+1.
    const int end = m * (block - 1) + 1 + letter;

    // Walk clockwise from the end, jumping across added chords: the vertices
    // met are exactly those not separated from the end.
    std::vector<int> visible;
    for (int w = end; w > 0;) {
      w = (w != end && lowest_partner[w] >= 0) ? lowest_partner[w] : w - 1;
      visible.push_back(w);
    }
    std::vector<int> starts;
    for (int s : visible) {
      if (static_cast<int>(starts.size()) == c) break;
      // (end-1, end) is a side; vertex 0 carries no letter.
      if (s >= 1 && s != end - 1 && vertex_letter(m, s) == prev_letter) starts.push_back(s);
    }
    if (static_cast<int>(starts.size()) < c) {
      throw Error(ErrorKind::ConstructionStuck,
                  "entry " + std::to_string(l) + " needs " + std::to_string(c) +
                      " starting vertices, found " + std::to_string(starts.size()));
    }
    if (trace) {
      int first = starts.back();
      int before = static_cast<int>(std::count_if(visible.begin(), visible.end(),
                                                  [&](int x) { return x < first; }));
      trace->push_back({l, end, starts, before});
    }
    for (int s : starts) {
      added.push_back({s, end});
      if (lowest_partner[end] < 0 || s < lowest_partner[end]) lowest_partner[end] = s;
    }
  }

  // Complete with every Q0 diagonal crossing nothing added so far.
  for (int k = 1; k < n; ++k) {
    Chord d = q0_diagonal(m, k);
    bool free = std::none_of(added.begin(), added.end(), [&](Chord e) { return chords_cross(d, e); });
    if (free) added.push_back(d);
  }
  if (static_cast<int>(added.size()) != n - 1) {
    throw Error(ErrorKind::ConstructionStuck,
                "completion produced " + std::to_string(added.size()) + " diagonals, expected " +
                    std::to_string(n - 1));
  }
  try {
    return Dissection(m, n, std::move(added));
  } catch (const Error& e) {
    throw Error(ErrorKind::ConstructionStuck, std::string("psi produced an invalid dissection: ") + e.what());
  }
}

}  // namespace mang

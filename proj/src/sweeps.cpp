#include "mang/sweeps.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mang/bijection.hpp"
#include "mang/error.hpp"
#include "mang/poly.hpp"

namespace mang {

namespace {

struct ItemOutcome {
  std::uint64_t checked = 0;
  std::optional<SweepResult> failure;
};

// Runs fn(i) for i in [0, count) and keeps the failure with the smallest i,
// so serial and parallel runs report the same witness.
template <class Fn>
SweepResult run_items(int count, Exec exec, Fn&& fn) {
  std::uint64_t checked = 0;
  int first_bad = count;
  std::optional<SweepResult> bad;
  auto one = [&](int i, std::uint64_t& local_checked) {
    ItemOutcome out;
    try {
      out = fn(i);
    } catch (const std::exception& e) {
      out.failure = SweepResult::fail({}, e.what());
    }
    local_checked += out.checked;
    if (out.failure) {
#pragma omp critical(mang_sweep_failure)
      if (i < first_bad) {
        first_bad = i;
        bad = std::move(out.failure);
      }
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : checked)
    for (int i = 0; i < count; ++i) one(i, checked);
  } else {
    for (int i = 0; i < count; ++i) one(i, checked);
  }
  SweepResult result = bad ? std::move(*bad) : SweepResult{};
  result.checked = checked;
  return result;
}

ItemOutcome item_fail(std::vector<Dissection> witnesses, std::string detail) {
  return {0, SweepResult::fail(std::move(witnesses), std::move(detail))};
}

std::string pair_text(const Dissection& a, const Dissection& b) {
  return a.to_string() + " and " + b.to_string();
}

// P(m, k) for k = 1..n-1; slot 0 and slot n stay empty.
std::vector<std::optional<FinitePoset>> smaller_posets(int m, int n, const Limits& limits) {
  std::vector<std::optional<FinitePoset>> out(n + 1);
  for (int k = 1; k < n; ++k) out[k] = build_poset(m, k, limits);
  return out;
}

const FinitePoset& poset_of_size(const FinitePoset& poset, const std::vector<std::optional<FinitePoset>>& smaller,
                                 int k) {
  return k == poset.n ? poset : *smaller.at(k);
}

}  // namespace

std::uint64_t interval_count(const FinitePoset& poset) {
  std::uint64_t total = 0;
  for (const Bits& row : poset.up) total += row.count();
  return total;
}

SweepResult interval_sweep(const FinitePoset& poset, Exec exec) {
  return run_items(poset.size(), exec, [&](int a) {
    ItemOutcome out;
    const std::vector<long long> mu = mobius_from(poset, a);
    const Bits& above = poset.up[a];
    for (auto bi = above.find_first(); bi != Bits::npos; bi = above.find_next(bi)) {
      const int b = static_cast<int>(bi);
      const Dissection& bottom = poset.elements[a];
      const Dissection& top = poset.elements[b];
      const Interval interval = make_interval(poset, a, b);
      const IntervalStructure s = analyze_interval(poset, interval);
      if (!s.failure.empty()) return item_fail({bottom, top}, s.failure);
      const bool antichain =
          std::all_of(s.forest.parent.begin(), s.forest.parent.end(), [](int p) { return p < 0; });
      const long long expected = antichain ? (s.forest.nodes.size() % 2 ? -1 : 1) : 0;
      if (mu[b] != expected) {
        return item_fail({bottom, top}, "Moebius value " + std::to_string(mu[b]) + ", forest predicts " +
                                            std::to_string(expected));
      }
      try {
        interval_decompose(bottom, top);
      } catch (const Error& e) {
        return item_fail({bottom, top}, e.what());
      }
      ++out.checked;
    }
    return out;
  });
}

SweepResult interval_sweep_reference(const FinitePoset& poset) {
  return run_items(poset.size(), Exec::Serial, [&](int a) {
    ItemOutcome out;
    for (int b = 0; b < poset.size(); ++b) {
      if (!poset.leq(a, b)) continue;
      const Dissection& bottom = poset.elements[a];
      const Dissection& top = poset.elements[b];
      const Interval interval = make_interval(poset, a, b);
      const IntervalStructure s = analyze_interval_reference(poset, interval);
      if (!s.failure.empty()) return item_fail({bottom, top}, s.failure);
      // Moebius recursion restricted to the interval, elements by rank.
      std::vector<int> order = interval.elements;
      std::stable_sort(order.begin(), order.end(),
                       [&](int x, int y) { return poset.ranks[x] < poset.ranks[y]; });
      std::map<int, long long> mu;
      for (int z : order) {
        long long sum = 0;
        for (const auto& [y, value] : mu) {
          if (poset.leq(y, z)) sum += value;
        }
        mu[z] = z == a ? 1 : -sum;
      }
      if (mu[b] < -1 || mu[b] > 1) {
        return item_fail({bottom, top}, "Moebius value " + std::to_string(mu[b]) + " outside {-1,0,1}");
      }
      try {
        interval_decompose(bottom, top);
      } catch (const Error& e) {
        return item_fail({bottom, top}, e.what());
      }
      ++out.checked;
    }
    return out;
  });
}

SweepResult divisibility_sweep(const FinitePoset& poset, Exec exec) {
  std::vector<FactoredPoly> polys;
  polys.reserve(poset.size());
  for (const Dissection& q : poset.elements) polys.push_back(poly_for_dissection(q));

  std::vector<BinomialFactor> alphabet;
  bool repeated = false;
  for (const FactoredPoly& p : polys) {
    alphabet.insert(alphabet.end(), p.factors.begin(), p.factors.end());
    repeated = repeated || std::adjacent_find(p.factors.begin(), p.factors.end()) != p.factors.end();
  }
  std::sort(alphabet.begin(), alphabet.end(), factor_less);
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

  // With at most 64 distinct factors and none repeated inside one P_Q,
  // divisibility is inclusion of 64-bit masks.
  const bool use_masks = !repeated && alphabet.size() <= 64;
  std::vector<std::uint64_t> masks(polys.size(), 0);
  if (use_masks) {
    for (std::size_t i = 0; i < polys.size(); ++i) {
      for (const BinomialFactor& f : polys[i].factors) {
        auto it = std::lower_bound(alphabet.begin(), alphabet.end(), f, factor_less);
        masks[i] |= std::uint64_t{1} << (it - alphabet.begin());
      }
    }
  }
  return run_items(poset.size(), exec, [&](int i) {
    ItemOutcome out;
    for (int j = 0; j < poset.size(); ++j) {
      const bool divides_ij = use_masks ? (masks[i] & ~masks[j]) == 0 : divides(polys[i], polys[j]);
      if (divides_ij != poset.leq(i, j)) {
        return item_fail({poset.elements[i], poset.elements[j]},
                         divides_ij ? "P_Q divides P_Q' but Q is not below Q'"
                                    : "Q is below Q' but P_Q does not divide P_Q'");
      }
      ++out.checked;
    }
    return out;
  });
}

SweepResult divisibility_sweep_reference(const FinitePoset& poset) {
  return run_items(poset.size(), Exec::Serial, [&](int i) {
    ItemOutcome out;
    const FactoredPoly p = poly_for_dissection(poset.elements[i]);
    for (int j = 0; j < poset.size(); ++j) {
      if (divides(p, poly_for_dissection(poset.elements[j])) != poset.leq(i, j)) {
        return item_fail({poset.elements[i], poset.elements[j]}, "divisibility differs from the order");
      }
      ++out.checked;
    }
    return out;
  });
}

SweepResult exact_division_sample(const FinitePoset& poset, std::size_t pairs, std::uint64_t seed) {
  const int size = poset.size();
  std::vector<std::pair<int, int>> chosen;
  if (static_cast<std::size_t>(size) * size <= pairs) {
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) chosen.emplace_back(i, j);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, size - 1);
    for (std::size_t k = 0; k < pairs; ++k) {
      int i = pick(rng);
      int j = pick(rng);
      if (k % 2 == 0) {
        // Comparable half: the j-th element above i, cyclically.
        const Bits& above = poset.up[i];
        std::size_t skip = static_cast<std::size_t>(j) % above.count();
        auto bit = above.find_first();
        while (skip-- > 0) bit = above.find_next(bit);
        j = static_cast<int>(bit);
      }
      chosen.emplace_back(i, j);
    }
  }
  SweepResult result;
  for (const auto& [i, j] : chosen) {
    const SparsePoly divisor = expand(poly_for_dissection(poset.elements[i]));
    const SparsePoly dividend = expand(poly_for_dissection(poset.elements[j]));
    const std::optional<SparsePoly> quotient = exact_quotient(dividend, divisor);
    if (quotient.has_value() != poset.leq(i, j)) {
      return SweepResult::fail({poset.elements[i], poset.elements[j]},
                               "exact division disagrees with the order for " +
                                   pair_text(poset.elements[i], poset.elements[j]));
    }
    if (quotient && !(*quotient * divisor == dividend)) {
      return SweepResult::fail({poset.elements[i], poset.elements[j]}, "quotient times divisor is not the dividend");
    }
    ++result.checked;
  }
  return result;
}

std::optional<std::string> fan_trace_violation(const MVector& v, const std::vector<FanStep>& trace) {
  for (const FanStep& step : trace) {
    for (int s : step.starts) {
      if (s <= 0 || s >= step.end) return "fan start " + std::to_string(s) + " is not between the apex and the end";
    }
    int prefix = 0;
    for (int i = 0; i < step.position; ++i) prefix += v.entries[i];
    const int predicted = step.position - v.m * prefix;
    if (step.visible_before_first_start != predicted) {
      return "entry " + std::to_string(step.position) + ": " + std::to_string(step.visible_before_first_start) +
             " visible vertices before the first start, expected " + std::to_string(predicted);
    }
  }
  return std::nullopt;
}

namespace {

SweepResult compare_with_dyck(std::vector<MVector> images, int m, int n, const Limits& limits, const char* what) {
  std::sort(images.begin(), images.end());
  SweepResult result;
  if (auto dup = std::adjacent_find(images.begin(), images.end()); dup != images.end()) {
    result.pass = false;
    result.vector_witness = *dup;
    result.detail = std::string(what) + " is not injective";
    return result;
  }
  std::vector<MVector> dyck = enumerate_dyck(m, n, limits);
  std::sort(dyck.begin(), dyck.end());
  if (images != dyck) {
    std::vector<MVector> missing;
    std::set_difference(dyck.begin(), dyck.end(), images.begin(), images.end(), std::back_inserter(missing));
    result.pass = false;
    if (!missing.empty()) result.vector_witness = missing.front();
    result.detail = std::string(what) + " image differs from the Dyck vectors";
  }
  return result;
}

}  // namespace

SweepResult bijection_sweep(int m, int n, Exec exec, const Limits& limits) {
  const std::vector<Dissection> elements = enumerate_dissections(m, n, limits);
  std::vector<MVector> images(elements.size());
  SweepResult forward = run_items(static_cast<int>(elements.size()), exec, [&](int i) {
    const Dissection& q = elements[i];
    MVector v = phi(q);
    std::vector<FanStep> trace;
    if (psi(v, &trace) != q) return item_fail({q}, "psi(phi(Q)) differs from Q");
    if (auto why = fan_trace_violation(v, trace)) return item_fail({q}, *why);
    images[i] = std::move(v);
    return ItemOutcome{1, std::nullopt};
  });
  if (!forward.pass) return forward;

  SweepResult image = compare_with_dyck(images, m, n, limits, "phi");
  if (!image.pass) return image;

  const std::vector<MVector> dyck = enumerate_dyck(m, n, limits);
  SweepResult backward = run_items(static_cast<int>(dyck.size()), exec, [&](int i) {
    ItemOutcome out;
    std::optional<std::string> why;
    try {
      if (phi(psi(dyck[i])) != dyck[i]) why = "phi(psi(v)) differs from v";
    } catch (const Error& e) {
      why = e.what();
    }
    if (why) {
      SweepResult r = SweepResult::fail({}, *why);
      r.vector_witness = dyck[i];
      out.failure = std::move(r);
    }
    out.checked = 1;
    return out;
  });
  backward.checked += forward.checked;
  return backward;
}

SweepResult leading_monomial_sweep(int m, int n, Exec exec, const Limits& limits) {
  const std::vector<Dissection> elements = enumerate_dissections(m, n, limits);
  std::vector<MVector> images(elements.size());
  SweepResult each = run_items(static_cast<int>(elements.size()), exec, [&](int i) {
    MVector v = leading_monomial(poly_for_dissection(elements[i])).exponents;
    if (!is_dyck(v)) return item_fail({elements[i]}, "leading exponent vector is not Dyck");
    images[i] = std::move(v);
    return ItemOutcome{1, std::nullopt};
  });
  if (!each.pass) return each;
  SweepResult image = compare_with_dyck(std::move(images), m, n, limits, "Q -> LM(P_Q)");
  image.checked = each.checked;
  return image;
}

std::vector<std::uint64_t> rank_census(int m, int n, const Limits& limits) {
  std::vector<std::uint64_t> out(n, 0);
  for (const Dissection& q : enumerate_dissections(m, n, limits)) ++out[rank(q)];
  return out;
}

SweepResult involution_sweep(int m, int n, const Limits& limits) {
  const std::vector<Dissection> elements = enumerate_dissections(m, n, limits);
  auto key = [](const FactoredPoly& p) {
    std::vector<int> k;
    for (const BinomialFactor& f : p.factors) {
      k.insert(k.end(), {f.high.letter, f.high.index, f.low.letter, f.low.index});
    }
    return k;
  };
  std::set<std::vector<int>> all;
  for (const Dissection& q : elements) all.insert(key(poly_for_dissection(q)));
  SweepResult result;
  for (const Dissection& q : elements) {
    if (!all.contains(key(involution_image(poly_for_dissection(q)).poly))) {
      return SweepResult::fail({q}, "involution image of P_Q is not of the form +-P_Q'");
    }
    ++result.checked;
  }
  return result;
}

SweepResult poset_structure_sweep(const FinitePoset& poset, Exec exec) {
  const int bottom = poset.minimum();
  if (bottom < 0 || !poset.up[bottom].all()) {
    return SweepResult::fail({make_q0(poset.m, poset.n)}, "Q0 is not below every element");
  }
  if (!rank_is_consistent(poset)) return SweepResult::fail({make_q0(poset.m, poset.n)}, "grading is inconsistent");
  if (CheckResult c = cover_count_check(poset); !c.pass) return SweepResult::fail({*c.counterexample}, c.detail);
  for (int i = 0; i < poset.size(); ++i) {
    if (poset.covers[i].empty() != is_final(poset.elements[i])) {
      return SweepResult::fail({poset.elements[i]}, "maximal elements are not the final dissections");
    }
  }
  return run_items(poset.size(), exec, [&](int i) {
    ItemOutcome out;
    int current = i;
    for (int step = 0; step < poset.ranks[i]; ++step) {
      std::optional<Dissection> next;
      try {
        next = lemma_descent_step(poset.elements[current]);
      } catch (const Error& e) {
        return item_fail({poset.elements[i]}, e.what());
      }
      int j = poset.index_of(*next);
      const auto& below = poset.covered[current];
      if (j < 0 || !std::binary_search(below.begin(), below.end(), j)) {
        return item_fail({poset.elements[i]}, "descent step is not a lower cover");
      }
      current = j;
      ++out.checked;
    }
    if (current != bottom) return item_fail({poset.elements[i]}, "descent did not reach Q0");
    return out;
  });
}

SweepResult factorization_sweep(const FinitePoset& poset, Exec exec, const Limits& limits) {
  const auto smaller = smaller_posets(poset.m, poset.n, limits);
  const int bottom = poset.minimum();
  auto initial_profile = [&](const Dissection& top, std::uint64_t& size) {
    const FinitePoset& p = poset_of_size(poset, smaller, top.n());
    const Interval interval = make_interval(p, p.minimum(), p.index_of(top));
    size = interval.elements.size();
    return degree_profile(p, interval);
  };
  return run_items(poset.size(), exec, [&](int a) {
    ItemOutcome out;
    const Dissection& top = poset.elements[a];
    const Interval whole = make_interval(poset, bottom, a);
    const DegreeProfile profile = degree_profile(poset, whole);

    const std::vector<Dissection> pieces = cut_L(top);
    if (pieces.size() > 1) {
      DegreeProfile product{{{0, 0}, 1}};
      std::uint64_t count = 1;
      for (const Dissection& piece : pieces) {
        std::uint64_t size = 0;
        product = product_profile(product, initial_profile(piece, size));
        count *= size;
      }
      if (count != whole.elements.size() || product != profile) {
        return item_fail({top}, "[Q0, A] is not the product of the initial-final intervals of its pieces");
      }
      ++out.checked;
    }

    if (is_final(top)) {
      const int width = width_and_blocks(top).width;
      if (width > 1) {
        DegreeProfile product{{{0, 0}, 1}};
        std::uint64_t count = 1;
        for (int j = 0; j < width; ++j) {
          const Dissection block = single_block_final(top, j);
          if (width_and_blocks(block).width != 1) return item_fail({top}, "single-block final has width != 1");
          std::uint64_t size = 0;
          product = product_profile(product, initial_profile(block, size));
          count *= size;
        }
        if (count != whole.elements.size() || product != profile) {
          return item_fail({top}, "[Q0, Q] is not the product of its width-1 factors");
        }
        ++out.checked;
      }
    }
    return out;
  });
}

SweepResult apex_chord_sweep(const FinitePoset& poset, Exec exec) {
  return run_items(poset.size(), exec, [&](int a) {
    ItemOutcome out;
    const Dissection& q = poset.elements[a];
    if (!is_final(q)) return out;
    const std::vector<Chord> d = apex_diagonal_set_D(q);
    if (static_cast<int>(d.size()) != poset.m - 1) return item_fail({q}, "D does not have m-1 chords");
    const Bits& below = poset.down[a];
    for (auto z = below.find_first(); z != Bits::npos; z = below.find_next(z)) {
      const Dissection& lower = poset.elements[z];
      for (const Chord& c : d) {
        bool bad = lower.contains(c) || std::any_of(lower.diagonals().begin(), lower.diagonals().end(),
                                                    [&](Chord e) { return chords_cross(c, e); });
        if (bad) return item_fail({q, lower}, "a chord of D lies in or crosses an element below Q");
      }
      ++out.checked;
    }
    return out;
  });
}

SweepResult upper_ideal_sweep(const FinitePoset& poset, Exec exec, const Limits& limits) {
  const auto smaller = smaller_posets(poset.m, poset.n, limits);
  return run_items(poset.size(), exec, [&](int a) {
    const int k = static_cast<int>(cut_L(poset.elements[a]).size());
    CheckResult c = upper_ideal_iso_check(poset, poset_of_size(poset, smaller, k), a);
    if (!c.pass) return item_fail({poset.elements[a]}, c.detail);
    return ItemOutcome{1, std::nullopt};
  });
}

}  // namespace mang

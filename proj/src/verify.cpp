#include "mang/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <set>

#include "mang/bijection.hpp"
#include "mang/error.hpp"
#include "mang/flip_poset.hpp"
#include "mang/poly.hpp"
#include "mang/qsym.hpp"
#include "mang/series.hpp"

namespace mang {

namespace {

struct Context {
  int m;
  int n;
  Limits limits;
  Exec exec;
  std::optional<FinitePoset> cached;

  const FinitePoset& poset() {
    if (!cached) cached = build_poset(m, n, limits);
    return *cached;
  }
};

Json global_payload(int m, int n) { return {{"m", m}, {"n", n}}; }

std::pair<const char*, const char*> pair_keys(const std::string& check) {
  if (check == "apex-chords") return {"final", "below"};
  return {"bottom", "top"};
}

void absorb(VerificationReport& r, const SweepResult& s) {
  r.pass = s.pass;
  r.checked = s.checked;
  r.detail = s.detail;
  if (s.pass) return;
  if (s.witnesses.size() == 1) {
    r.counterexample = to_json(s.witnesses[0]);
  } else if (s.witnesses.size() == 2) {
    auto [first, second] = pair_keys(r.check);
    r.counterexample = {{first, to_json(s.witnesses[0])}, {second, to_json(s.witnesses[1])}};
  } else if (s.vector_witness) {
    r.counterexample = to_json(*s.vector_witness);
  } else {
    r.counterexample = global_payload(r.m, r.n);
  }
}

void fail_global(VerificationReport& r, std::string detail) {
  r.pass = false;
  r.detail = std::move(detail);
  r.counterexample = global_payload(r.m, r.n);
}

void absorb(VerificationReport& r, const CheckResult& c) {
  r.pass = c.pass;
  r.detail = c.detail;
  if (!c.pass) r.counterexample = to_json(*c.counterexample);
}

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

using CheckFn = std::function<void(Context&, VerificationReport&)>;

struct CheckDef {
  const char* suite;
  const char* check;
  CheckFn run;
};

const std::vector<CheckDef>& checks() {
  static const std::vector<CheckDef> table = {
      {"poset", "structure",
       [](Context& c, VerificationReport& r) { absorb(r, poset_structure_sweep(c.poset(), c.exec)); }},
      {"poset", "chains",
       [](Context& c, VerificationReport& r) {
         BigInt expected = factorial(c.n - 1);
         for (int i = 1; i < c.n; ++i) expected *= c.m;
         BigInt actual = maximal_chain_count(c.poset());
         r.data = {{"chains", actual.str()}};
         r.checked = 1;
         if (actual != expected) fail_global(r, actual.str() + " maximal chains, expected " + expected.str());
       }},
      {"poset", "width-covers",
       [](Context& c, VerificationReport& r) {
         absorb(r, width_cover_check(c.poset()));
         r.checked = c.poset().maximal_elements().size();
       }},
      {"poset", "upper-ideals",
       [](Context& c, VerificationReport& r) { absorb(r, upper_ideal_sweep(c.poset(), c.exec, c.limits)); }},
      {"poset", "factorization",
       [](Context& c, VerificationReport& r) { absorb(r, factorization_sweep(c.poset(), c.exec, c.limits)); }},
      {"poset", "apex-chords",
       [](Context& c, VerificationReport& r) { absorb(r, apex_chord_sweep(c.poset(), c.exec)); }},
      {"poset", "ambient-lattice",
       [](Context& c, VerificationReport& r) {
         const FinitePoset& p = c.poset();
         r.data = {{"isLattice", is_lattice(p)}, {"maximalElements", p.maximal_elements().size()}};
         r.detail = "observed, not asserted";
       }},
      {"bijection", "round-trips",
       [](Context& c, VerificationReport& r) { absorb(r, bijection_sweep(c.m, c.n, c.exec, c.limits)); }},
      {"bijection", "leading-monomials",
       [](Context& c, VerificationReport& r) { absorb(r, leading_monomial_sweep(c.m, c.n, c.exec, c.limits)); }},
      {"bijection", "involution",
       [](Context& c, VerificationReport& r) {
         SweepResult s = involution_sweep(c.m, c.n, c.limits);
         r.data = {{"closed", s.pass}};
         if (!s.pass && c.m >= 3) {
           r.checked = s.checked;
           r.detail = "not closed; recorded, not asserted for m >= 3";
           return;
         }
         absorb(r, s);
       }},
      {"divisibility", "divisibility",
       [](Context& c, VerificationReport& r) { absorb(r, divisibility_sweep(c.poset(), c.exec)); }},
      {"divisibility", "exact-division",
       [](Context& c, VerificationReport& r) { absorb(r, exact_division_sample(c.poset(), 128)); }},
      {"qsym", "quotient-basis",
       [](Context& c, VerificationReport& r) {
         QuotientReport q = basis_graded_report(c.m, c.n, c.limits);
         r.data = to_json(q);
         r.checked = q.degrees.size();
         r.pass = q.pass;
         for (const DegreeReport& d : q.degrees) {
           if (d.pass) continue;
           r.detail = "degree " + std::to_string(d.degree) + " fails";
           r.counterexample = {{"m", c.m}, {"n", c.n}, {"degree", d.degree}};
           break;
         }
       }},
      {"intervals", "intervals",
       [](Context& c, VerificationReport& r) { absorb(r, interval_sweep(c.poset(), c.exec)); }},
      {"intervals", "interval-count",
       [](Context& c, VerificationReport& r) {
         const std::uint64_t count = interval_count(c.poset());
         const Series i = series_I(c.m, c.n);
         r.data = {{"intervals", count}, {"series", i[c.n].str()}};
         r.checked = 1;
         if (i[c.n] != Rational(count)) fail_global(r, "interval count differs from [x^n] T(F)");
       }},
      {"series", "residuals",
       [](Context& c, VerificationReport& r) {
         const int order = std::max(c.n, 8);
         r.data = {{"order", order}};
         r.checked = 3;
         if (!residual_T(c.m, order).is_zero()) return fail_global(r, "T - x(1+T)^(m+1) is not zero");
         if (!residual_F(c.m, order).is_zero()) return fail_global(r, "x(1+T)^m - T/(1+T) is not zero");
         if (!residual_I(c.m, order).is_zero()) return fail_global(r, "I - T(F) is not zero");
       }},
      {"series", "fuss-catalan",
       [](Context& c, VerificationReport& r) {
         const Series t = series_T(c.m, c.n);
         const auto count = enumerate_dissections(c.m, c.n, c.limits).size();
         r.data = {{"dissections", count}};
         r.checked = 1;
         if (t[c.n] != Rational(count) || count != fuss_catalan(c.m, c.n)) {
           fail_global(r, "dissection count differs from [x^n] T");
         }
       }},
      {"series", "finals",
       [](Context& c, VerificationReport& r) {
         const Series f = series_F(c.m, c.n);
         const auto all = enumerate_dissections(c.m, c.n, c.limits);
         const auto finals = std::count_if(all.begin(), all.end(), [](const Dissection& q) { return is_final(q); });
         r.data = {{"finals", finals}};
         r.checked = 1;
         if (f[c.n] != Rational(finals)) fail_global(r, "final count differs from [x^n] F");
       }},
      {"series", "rank-census",
       [](Context& c, VerificationReport& r) {
         const std::vector<std::uint64_t> census = rank_census(c.m, c.n, c.limits);
         const std::vector<BigInt> formula = rank_polynomial(c.m, c.n);
         const ZPoly slice = series_G(c.m, c.n)[c.n];
         r.data = {{"census", census}};
         r.checked = census.size();
         for (int k = 0; k < c.n; ++k) {
           if (formula[k] != census[k] || slice.coefficient(k) != Rational(census[k])) {
             return fail_global(r, "rank " + std::to_string(k) + " count differs from the rank polynomial");
           }
         }
         if (slice.degree() != c.n - 1) fail_global(r, "[x^n] G has the wrong degree in z");
       }},
  };
  return table;
}

VerificationReport run_check(const CheckDef& def, Context& ctx) {
  VerificationReport r;
  r.suite = def.suite;
  r.check = def.check;
  r.m = ctx.m;
  r.n = ctx.n;
  const auto start = std::chrono::steady_clock::now();
  try {
    def.run(ctx, r);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SizeGuardExceeded || e.kind() == ErrorKind::InvalidArgument) throw;
    fail_global(r, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

const CheckDef& find_check(const std::string& check) {
  for (const CheckDef& def : checks()) {
    if (check == def.check) return def;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown check \"" + check + "\"");
}

std::optional<std::string> replay_element(Context& ctx, const std::string& check, const Dissection& q) {
  if (check == "structure") {
    const FinitePoset& p = ctx.poset();
    int i = p.index_of(q);
    const int expected = ctx.m * (ctx.n - 1 - rank(q));
    if (static_cast<int>(p.covers[i].size()) != expected) return "cover count differs from m(n-1-r)";
    if (p.covers[i].empty() != is_final(q)) return "maximality differs from finality";
    Dissection current = q;
    try {
      for (int step = rank(q); step > 0; --step) current = lemma_descent_step(current);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    if (current != make_q0(ctx.m, ctx.n)) return "descent did not reach Q0";
    return std::nullopt;
  }
  if (check == "round-trips") {
    try {
      std::vector<FanStep> trace;
      MVector v = phi(q);
      if (psi(v, &trace) != q) return "psi(phi(Q)) differs from Q";
      return fan_trace_violation(v, trace);
    } catch (const Error& e) {
      return std::string(e.what());
    }
  }
  if (check == "leading-monomials") {
    if (!is_dyck(leading_monomial(poly_for_dissection(q)).exponents)) return "leading exponent vector is not Dyck";
    return std::nullopt;
  }
  if (check == "involution") {
    const FactoredPoly image = involution_image(poly_for_dissection(q)).poly;
    for (const Dissection& other : enumerate_dissections(ctx.m, ctx.n, ctx.limits)) {
      if (poly_for_dissection(other) == image) return std::nullopt;
    }
    return "involution image of P_Q is not of the form +-P_Q'";
  }
  if (check == "width-covers") {
    const FinitePoset& p = ctx.poset();
    const int width = width_and_blocks(q).width;
    if (static_cast<int>(p.covered[p.index_of(q)].size()) != width) return "lower cover count differs from width";
    return std::nullopt;
  }
  if (check == "upper-ideals") {
    CheckResult c = upper_ideal_iso_check(ctx.poset(), ctx.poset().index_of(q), ctx.limits);
    if (!c.pass) return c.detail;
    return std::nullopt;
  }
  VerificationReport r = run_check(find_check(check), ctx);
  if (!r.pass) return r.detail;
  return std::nullopt;
}

std::optional<std::string> replay_pair(Context& ctx, const std::string& check, const Dissection& x,
                                       const Dissection& y) {
  const FinitePoset& p = ctx.poset();
  const int i = p.index_of(x), j = p.index_of(y);
  if (check == "divisibility") {
    if (divides(poly_for_dissection(x), poly_for_dissection(y)) != p.leq(i, j)) return "divisibility differs from the order";
    return std::nullopt;
  }
  if (check == "exact-division") {
    const bool exact = exact_quotient(expand(poly_for_dissection(y)), expand(poly_for_dissection(x))).has_value();
    if (exact != p.leq(i, j)) return "exact division differs from the order";
    return std::nullopt;
  }
  if (check == "intervals") {
    if (!p.leq(i, j)) return "bottom is not below top";
    const Interval interval = make_interval(p, i, j);
    IntervalStructure s = analyze_interval(p, interval);
    if (!s.failure.empty()) return s.failure;
    const long long mu = mobius(p, interval);
    if (mu < -1 || mu > 1) return "Moebius value outside {-1,0,1}";
    try {
      interval_decompose(x, y);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::nullopt;
  }
  if (check == "apex-chords") {
    if (!p.leq(j, i)) return "the second dissection is not below the first";
    for (const Chord& c : apex_diagonal_set_D(x)) {
      if (y.contains(c)) return "a chord of D lies in the lower element";
      for (const Chord& e : y.diagonals()) {
        if (chords_cross(c, e)) return "a chord of D crosses the lower element";
      }
    }
    return std::nullopt;
  }
  VerificationReport r = run_check(find_check(check), ctx);
  if (!r.pass) return r.detail;
  return std::nullopt;
}

}  // namespace

Json to_json(const VerificationReport& report, bool with_timing) {
  Json j = {{"suite", report.suite},        {"check", report.check},   {"m", report.m},
            {"n", report.n},                {"pass", report.pass},     {"counterexample", report.counterexample},
            {"detail", report.detail},      {"checked", report.checked}};
  if (!report.data.is_null()) j["data"] = report.data;
  if (with_timing) j["seconds"] = report.seconds;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"poset", "bijection", "divisibility", "qsym", "intervals", "series"};
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& suite, int m, int n, const Limits& limits, Exec exec) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "m and n must be >= 1");
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw Error(ErrorKind::InvalidArgument, "unknown suite \"" + suite + "\"");
  }
  Context ctx{m, n, limits, exec, std::nullopt};
  std::vector<VerificationReport> out;
  for (const std::string& name : names) {
    if (suite != "all" && suite != name) continue;
    for (const CheckDef& def : checks()) {
      if (name == def.suite) out.push_back(run_check(def, ctx));
    }
  }
  return out;
}

ReplayOutcome replay(const Json& report, const Limits& limits) {
  if (!report.is_object() || !report.contains("counterexample") || report.at("counterexample").is_null()) {
    throw Error(ErrorKind::InvalidArgument, "report has no counterexample to replay");
  }
  const std::string check = report.value("check", "");
  const int m = report.value("m", 0), n = report.value("n", 0);
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "report lacks valid m and n");
  const Json& ce = report.at("counterexample");
  Context ctx{m, n, limits, Exec::Serial, std::nullopt};

  auto matching = [&](const Dissection& q) {
    if (q.m() != m || q.n() != n) throw Error(ErrorKind::InvalidArgument, "counterexample size differs from the report");
    return q;
  };
  std::optional<std::string> why;
  if (ce.contains("diagonals")) {
    why = replay_element(ctx, check, matching(dissection_from_json(ce)));
  } else if (ce.contains("entries")) {
    const MVector v = mvector_from_json(ce);
    if (check == "round-trips") {
      try {
        if (phi(psi(v)) != v) why = "phi(psi(v)) differs from v";
      } catch (const Error& e) {
        why = e.what();
      }
    } else {
      VerificationReport r = run_check(find_check(check), ctx);
      if (!r.pass) why = r.detail;
    }
  } else {
    auto [first, second] = pair_keys(check);
    if (ce.contains(first) && ce.contains(second)) {
      why = replay_pair(ctx, check, matching(dissection_from_json(ce.at(first))),
                        matching(dissection_from_json(ce.at(second))));
    } else {
      VerificationReport r = run_check(find_check(check), ctx);
      if (!r.pass) why = r.detail;
    }
  }
  if (why) return {true, *why};
  return {false, "the check passes on this counterexample"};
}

}  // namespace mang

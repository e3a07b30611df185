#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "mang/bijection.hpp"
#include "mang/error.hpp"
#include "mang/flip_poset.hpp"
#include "mang/poly.hpp"
#include "mang/series.hpp"
#include "mang/verify.hpp"

namespace mang::cli {

namespace {

std::string entries_text(const MVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v.entries[i]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

Json number(const Rational& r) {
  if (denominator(r) != 1) return r.str();
  const BigInt v = numerator(r);
  if (v <= std::numeric_limits<long long>::max() && v >= std::numeric_limits<long long>::min()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

std::string label_for(const Dissection& q, const std::string& labels) {
  if (labels == "diagonals") return q.to_string();
  if (labels == "dyck") return entries_text(phi(q));
  return to_string(poly_for_dissection(q));
}

}  // namespace

int cmd_enumerate(int m, int n, bool final_only, const std::string& format, std::ostream& out) {
  const std::vector<Dissection> all = enumerate_dissections(m, n);
  Json rows = Json::array();
  if (format == "csv") out << "rank,final,diagonals,dyck,polynomial,leading_monomial\n";
  for (const Dissection& q : all) {
    const bool final = is_final(q);
    if (final_only && !final) continue;
    const FactoredPoly p = poly_for_dissection(q);
    const MVector v = phi(q);
    const std::string lm = to_string(leading_monomial(p));
    if (format == "csv") {
      out << rank(q) << ',' << (final ? "true" : "false") << ',' << csv_field(q.to_string()) << ','
          << entries_text(v) << ',' << to_string(p) << ',' << lm << '\n';
    } else {
      rows.push_back({{"dissection", to_json(q)},
                      {"rank", rank(q)},
                      {"final", final},
                      {"dyck", to_json(v)},
                      {"polynomial", to_json(p)},
                      {"leadingMonomial", lm}});
    }
  }
  if (format == "json") out << rows.dump(2) << '\n';
  return kOk;
}

int cmd_poset(int m, int n, const std::string& emit, const std::string& labels, std::ostream& out) {
  const FinitePoset p = build_poset(m, n);
  if (emit == "dot") {
    out << "digraph P_" << m << '_' << n << " {\n  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i) {
      out << "  q" << i << " [label=\"" << label_for(p.elements[i], labels) << "\"];\n";
    }
    for (int i = 0; i < p.size(); ++i) {
      for (int j : p.covers[i]) out << "  q" << i << " -> q" << j << ";\n";
    }
    out << "}\n";
    return kOk;
  }
  Json nodes = Json::array(), edges = Json::array();
  for (int i = 0; i < p.size(); ++i) {
    nodes.push_back({{"id", i},
                     {"rank", p.ranks[i]},
                     {"dissection", to_json(p.elements[i])},
                     {"label", label_for(p.elements[i], labels)}});
    for (int j : p.covers[i]) edges.push_back({i, j});
  }
  out << Json{{"m", m}, {"n", n}, {"nodes", nodes}, {"edges", edges}}.dump(2) << '\n';
  return kOk;
}

int cmd_verify(int m, int n, const std::string& suite, const std::string& format, bool timing, bool serial,
               std::ostream& out) {
  const auto reports = run_suite(suite, m, n, Limits::from_env(), serial ? Exec::Serial : Exec::Parallel);
  bool all_pass = true;
  Json array = Json::array();
  for (const VerificationReport& r : reports) {
    all_pass = all_pass && r.pass;
    if (format == "json") {
      array.push_back(to_json(r, timing));
      continue;
    }
    out << (r.pass ? "PASS " : "FAIL ") << r.suite << '/' << r.check << " m=" << m << " n=" << n
        << " checked=" << r.checked;
    if (timing) out << " seconds=" << r.seconds;
    if (!r.detail.empty()) out << " (" << r.detail << ')';
    if (!r.data.is_null() && r.check != "quotient-basis") out << ' ' << r.data.dump();
    out << '\n';
    if (!r.pass) out << "  counterexample: " << r.counterexample.dump() << '\n';
  }
  if (format == "json") out << array.dump(2) << '\n';
  return all_pass ? kOk : kVerificationFailure;
}

int cmd_series(int m, int order, const std::string& which, const std::string& format, std::ostream& out) {
  std::vector<std::vector<Rational>> rows;  // one row per n = 1..order
  if (which == "G") {
    const BivariateSeries g = series_G(m, order);
    for (int n = 1; n <= order; ++n) rows.push_back(g[n].coeffs());
  } else {
    Series s = which == "T" ? series_T(m, order) : which == "F" ? series_F(m, order) : series_I(m, order);
    for (int n = 1; n <= order; ++n) rows.push_back({s[n]});
  }
  if (format == "json") {
    Json coefficients = Json::array();
    for (const auto& row : rows) {
      Json r = Json::array();
      for (const Rational& c : row) r.push_back(number(c));
      coefficients.push_back(which == "G" ? r : r[0]);
    }
    out << Json{{"m", m}, {"order", order}, {"which", which}, {"coefficients", coefficients}}.dump(2) << '\n';
  } else if (format == "csv") {
    out << (which == "G" ? "n,k,coefficient\n" : "n,coefficient\n");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t k = 0; k < rows[i].size(); ++k) {
        out << i + 1 << ',';
        if (which == "G") out << k << ',';
        out << rows[i][k].str() << '\n';
      }
    }
  } else {
    // Plain list: comma-separated coefficients, one line per size for G.
    auto join = [&](const std::vector<Rational>& xs) {
      for (std::size_t k = 0; k < xs.size(); ++k) out << (k ? "," : "") << xs[k].str();
    };
    if (which == "G") {
      for (const auto& row : rows) {
        join(row);
        out << '\n';
      }
    } else {
      std::vector<Rational> flat;
      for (const auto& row : rows) flat.push_back(row[0]);
      join(flat);
      out << '\n';
    }
  }
  return kOk;
}

int cmd_replay(const Json& input, std::ostream& out) {
  const Json reports = input.is_array() ? input : Json::array({input});
  bool refailed = false;
  int replayed = 0;
  for (const Json& report : reports) {
    if (report.value("pass", true)) continue;
    ++replayed;
    const ReplayOutcome outcome = replay(report);
    refailed = refailed || outcome.refails;
    out << (outcome.refails ? "REFAILS " : "PASSES ") << report.value("suite", "?") << '/'
        << report.value("check", "?") << ": " << outcome.detail << '\n';
  }
  if (replayed == 0) out << "no failing report to replay\n";
  return refailed ? kVerificationFailure : kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"M-angulations, their flip poset, m-Dyck vectors and the associated polynomials"};
  app.require_subcommand(1);
  int m = 0, n = 0, order = 0;
  bool final_only = false, timing = false, serial = false;
  std::string format, emit = "dot", labels = "poly", suite = "all", which = "T", file = "-";

  auto* enumerate = app.add_subcommand("enumerate", "List every M-angulation with rank, Dyck vector and P_Q");
  enumerate->add_option("--m", m, "region size minus two")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--n", n, "number of regions")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--final", final_only, "only final M-angulations");
  enumerate->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->default_str("csv");

  auto* poset = app.add_subcommand("poset", "Emit the Hasse diagram of the flip poset");
  poset->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  poset->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  poset->add_option("--emit", emit, "dot or json")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
  poset->add_option("--labels", labels, "node labels")
      ->check(CLI::IsMember({"poly", "diagonals", "dyck"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  verify->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  std::vector<std::string> suites{"all"};
  for (const std::string& s : suite_names()) suites.push_back(s);
  verify->add_option("--suite", suite)->check(CLI::IsMember(suites))->capture_default_str();
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_str("text");
  verify->add_flag("--timing", timing, "include wall-clock seconds");
  verify->add_flag("--serial", serial, "run the sweeps on one thread");

  auto* series = app.add_subcommand("series", "Coefficients of T, F, G or I");
  series->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  series->add_option("--order", order)->required()->check(CLI::PositiveNumber);
  series->add_option("--which", which)->check(CLI::IsMember({"T", "F", "G", "I"}))->capture_default_str();
  series->add_option("--format", format, "list, csv or json")
      ->check(CLI::IsMember({"list", "csv", "json"}))
      ->default_str("list");

  auto* replay_cmd = app.add_subcommand("replay", "Re-run the checks of failed reports on their counterexamples");
  replay_cmd->add_option("--file", file, "report JSON, '-' for stdin")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(m, n, final_only, format.empty() ? "csv" : format, out);
    if (poset->parsed()) return cmd_poset(m, n, emit, labels, out);
    if (verify->parsed()) return cmd_verify(m, n, suite, format.empty() ? "text" : format, timing, serial, out);
    if (series->parsed()) return cmd_series(m, order, which, format.empty() ? "list" : format, out);
    if (replay_cmd->parsed()) {
      Json input;
      if (file == "-") {
        input = Json::parse(std::cin);
      } else {
        std::ifstream in(file);
        if (!in) {
          err << "cannot open " << file << '\n';
          return kUsageError;
        }
        input = Json::parse(in);
      }
      return cmd_replay(input, out);
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    const bool usage = e.kind() == ErrorKind::SizeGuardExceeded || e.kind() == ErrorKind::InvalidArgument ||
                       e.kind() == ErrorKind::MalformedDissection;
    return usage ? kUsageError : kVerificationFailure;
  } catch (const Json::exception& e) {
    err << "invalid JSON: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace mang::cli

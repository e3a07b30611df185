#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "commands.hpp"
#include "mang/json_io.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "mang");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = mang::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Minimal DOT reader: node statements carry a label, edges use "->".
std::pair<int, int> dot_counts(const std::string& dot) {
  int nodes = 0, edges = 0;
  const std::regex node(R"(^\s*q\d+ \[label=".*"\];$)"), edge(R"(^\s*q\d+ -> q\d+;$)");
  for (const std::string& line : lines(dot)) {
    if (std::regex_match(line, node)) ++nodes;
    if (std::regex_match(line, edge)) ++edges;
  }
  return {nodes, edges};
}

}  // namespace

TEST_CASE("enumerate") {
  Run r = run({"enumerate", "--m", "2", "--n", "2"});
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  CHECK(rows.size() == 4);
  CHECK(rows[0] == "rank,final,diagonals,dyck,polynomial,leading_monomial");
  r = run({"enumerate", "--m", "2", "--n", "2", "--final"});
  CHECK(lines(r.out).size() == 3);
  r = run({"enumerate", "--m", "1", "--n", "1"});
  rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1] == "0,true,[],0,1,1");
  r = run({"enumerate", "--m", "2", "--n", "3", "--format", "json"});
  const mang::Json j = mang::Json::parse(r.out);
  CHECK(j.size() == 12);
  CHECK(j[0].contains("leadingMonomial"));
}

TEST_CASE("poset") {
  Run r = run({"poset", "--m", "2", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph P_2_3 {", 0) == 0);
  CHECK(dot_counts(r.out) == std::pair{12, 12});
  r = run({"poset", "--m", "3", "--n", "1", "--labels", "dyck"});
  CHECK(dot_counts(r.out) == std::pair{1, 0});
  r = run({"poset", "--m", "1", "--n", "3", "--emit", "json"});
  const mang::Json j = mang::Json::parse(r.out);
  CHECK(j["nodes"].size() == 5);
  CHECK(j["edges"].size() == 4);
  CHECK(run({"poset", "--m", "2", "--n", "2", "--labels", "colour"}).code == 2);
}

TEST_CASE("verify") {
  Run r = run({"verify", "--m", "2", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(lines(r.out).size() >= 15);
  r = run({"verify", "--m", "1", "--n", "4", "--suite", "divisibility", "--format", "json"});
  CHECK(r.code == 0);
  const mang::Json j = mang::Json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["check"] == "divisibility");
  CHECK(j[0]["pass"] == true);
  CHECK_FALSE(j[0].contains("seconds"));
  CHECK(run({"verify", "--m", "0", "--n", "3"}).code == 2);
  CHECK(run({"verify", "--m", "2", "--n", "6", "--suite", "intervals"}).code == 2);
  CHECK(run({"verify", "--m", "2", "--n", "3", "--suite", "bogus"}).code == 2);
}

TEST_CASE("series") {
  CHECK(run({"series", "--m", "2", "--order", "4"}).out == "1,3,12,55\n");
  CHECK(run({"series", "--m", "2", "--order", "4", "--which", "F"}).out == "1,2,7,30\n");
  CHECK(run({"series", "--m", "2", "--order", "3", "--which", "I"}).out == "1,5,31\n");
  CHECK(run({"series", "--m", "2", "--order", "3", "--which", "G"}).out == "1\n1,2\n1,4,7\n");
  CHECK(run({"series", "--m", "1", "--order", "2", "--format", "csv"}).out == "n,coefficient\n1,1\n2,2\n");
  const mang::Json j = mang::Json::parse(run({"series", "--m", "2", "--order", "3", "--format", "json"}).out);
  CHECK(j["coefficients"] == mang::Json::parse("[1,3,12]"));
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--m", "2", "--n", "4", "--format", "json"},
        std::vector<std::string>{"poset", "--m", "2", "--n", "4", "--emit", "json"},
        std::vector<std::string>{"enumerate", "--m", "3", "--n", "3"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("replay") {
  const std::string path = "replay_test_report.json";
  mang::Json report = {{"suite", "bijection"},
                       {"check", "round-trips"},
                       {"m", 2},
                       {"n", 2},
                       {"pass", false},
                       {"counterexample", {{"m", 2}, {"entries", {0, 1, 0, 0}}}}};
  std::ofstream(path) << report.dump();
  Run r = run({"replay", "--file", path});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("REFAILS bijection/round-trips", 0) == 0);

  report["counterexample"] = {{"m", 2}, {"n", 2}, {"diagonals", {{1, 4}}}};
  std::ofstream(path) << mang::Json::array({report}).dump();
  r = run({"replay", "--file", path});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASSES", 0) == 0);

  std::ofstream(path) << "{not json";
  CHECK(run({"replay", "--file", path}).code == 2);
  std::remove(path.c_str());
  CHECK(run({"replay", "--file", "does/not/exist.json"}).code == 2);
}

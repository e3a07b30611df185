#include "mang/json_io.hpp"

#include "mang/error.hpp"

namespace mang {

Json to_json(const Dissection& q) {
  Json diagonals = Json::array();
  for (const Chord& c : q.diagonals()) diagonals.push_back({c.a, c.b});
  return {{"m", q.m()}, {"n", q.n()}, {"diagonals", diagonals}};
}

Json to_json(const MVector& v) { return {{"m", v.m}, {"entries", v.entries}}; }

Json to_json(const FactoredPoly& p) {
  Json factors = Json::array();
  for (const BinomialFactor& f : p.factors) {
    factors.push_back({{f.high.letter, f.high.index}, {f.low.letter, f.low.index}});
  }
  return {{"m", p.m}, {"n", p.n}, {"factors", factors}, {"text", to_string(p)}};
}

Json to_json(const QuotientReport& report) {
  Json degrees = Json::array();
  for (const DegreeReport& d : report.degrees) {
    degrees.push_back({{"d", d.degree},
                       {"monomials", d.monomials},
                       {"idealRank", d.ideal_rank},
                       {"dyckCount", d.dyck_count},
                       {"completedRank", d.completed_rank},
                       {"pass", d.pass}});
  }
  return {{"m", report.m},
          {"n", report.n},
          {"degrees", degrees},
          {"hilbert", report.hilbert},
          {"totalDimension", report.total_dimension},
          {"pass", report.pass}};
}

namespace {

int int_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(ErrorKind::InvalidArgument, std::string("missing integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

}  // namespace

Dissection dissection_from_json(const Json& j) {
  const int m = int_field(j, "m");
  const int n = int_field(j, "n");
  if (!j.contains("diagonals") || !j.at("diagonals").is_array()) {
    throw Error(ErrorKind::InvalidArgument, "missing \"diagonals\" array");
  }
  std::vector<Chord> chords;
  for (const Json& c : j.at("diagonals")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
      throw Error(ErrorKind::InvalidArgument, "a diagonal must be a pair of integers");
    }
    int a = c[0].get<int>(), b = c[1].get<int>();
    if (a > b) std::swap(a, b);
    chords.push_back({a, b});
  }
  return Dissection(m, n, std::move(chords));
}

MVector mvector_from_json(const Json& j) {
  MVector v{int_field(j, "m"), {}};
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw Error(ErrorKind::InvalidArgument, "missing \"entries\" array");
  }
  for (const Json& e : j.at("entries")) {
    if (!e.is_number_integer()) throw Error(ErrorKind::InvalidArgument, "entries must be integers");
    v.entries.push_back(e.get<int>());
  }
  validate(v);
  return v;
}

}  // namespace mang

#pragma once

// JSON encodings shared by the CLI and the replay path.
//   Dissection  {"m":2,"n":3,"diagonals":[[0,3],[3,8]]}
//   MVector     {"m":2,"entries":[0,0,1,0]}
//   factor      [[high_letter,high_index],[low_letter,low_index]]

#include <json.hpp>

#include "mang/dissection.hpp"
#include "mang/dyck.hpp"
#include "mang/poly.hpp"
#include "mang/qsym.hpp"

namespace mang {

using Json = nlohmann::json;

Json to_json(const Dissection& q);
Json to_json(const MVector& v);
Json to_json(const FactoredPoly& p);
Json to_json(const QuotientReport& report);

/// Validating decoders; malformed input throws InvalidArgument or
/// MalformedDissection.
Dissection dissection_from_json(const Json& j);
MVector mvector_from_json(const Json& j);

}  // namespace mang

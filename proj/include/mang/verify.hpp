#pragma once

// Named verification suites over one (m, n), their JSON reports, and replay
// of a reported counterexample.

#include <cstdint>
#include <string>
#include <vector>

#include "mang/json_io.hpp"
#include "mang/limits.hpp"
#include "mang/sweeps.hpp"

namespace mang {

struct VerificationReport {
  std::string suite;
  std::string check;
  int m = 1;
  int n = 1;
  bool pass = true;
  // null on success.  A failure always carries a payload: a dissection, a
  // {"bottom","top"} or {"final","below"} pair, an m-vector, or {"m","n"}
  // (plus "degree" for the quotient check) when the claim is global.
  Json counterexample;
  std::string detail;
  std::uint64_t checked = 0;
  Json data;  // observations that are recorded but not asserted
  double seconds = 0;
};

/// Timing is left out unless asked for, so reports are byte-stable.
Json to_json(const VerificationReport& report, bool with_timing = false);

/// poset, bijection, divisibility, qsym, intervals, series.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all".  Throws InvalidArgument for an
/// unknown suite and SizeGuardExceeded when (m, n) is above its guard.
std::vector<VerificationReport> run_suite(const std::string& suite, int m, int n,
                                          const Limits& limits = Limits::from_env(),
                                          Exec exec = Exec::Parallel);

struct ReplayOutcome {
  bool refails = false;
  std::string detail;
};

/// Feeds the counterexample of a failed report back to its check.
/// Throws InvalidArgument when the report has no counterexample.
ReplayOutcome replay(const Json& report, const Limits& limits = Limits::from_env());

}  // namespace mang

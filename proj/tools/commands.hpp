#pragma once

#include <iosfwd>
#include <string>

#include "mang/json_io.hpp"

namespace mang::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

int cmd_enumerate(int m, int n, bool final_only, const std::string& format, std::ostream& out);
int cmd_poset(int m, int n, const std::string& emit, const std::string& labels, std::ostream& out);
int cmd_verify(int m, int n, const std::string& suite, const std::string& format, bool timing, bool serial,
               std::ostream& out);
int cmd_series(int m, int order, const std::string& which, const std::string& format, std::ostream& out);
/// Accepts one report or an array of reports; passing reports are skipped.
int cmd_replay(const Json& input, std::ostream& out);

/// Parses argv and dispatches.  Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mang::cli

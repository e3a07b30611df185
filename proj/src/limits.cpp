#include "mang/limits.hpp"

#include <cstdlib>
#include <string>

#include "mang/error.hpp"

namespace mang {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedDissection: return "MalformedDissection";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::NotAQ0Diagonal: return "NotAQ0Diagonal";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotFinal: return "NotFinal";
    case ErrorKind::EmptyCrossing: return "EmptyCrossing";
    case ErrorKind::ConstructionStuck: return "ConstructionStuck";
    case ErrorKind::NotDyck: return "NotDyck";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

long env_long(const char* name, long fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || value <= 0) return fallback;
  return value;
}

}  // namespace

Limits Limits::from_env() {
  Limits limits;
  long mn = env_long("MANG_MAX_MN", -1);
  if (mn > 0) {
    limits.enumerate_mn = static_cast<int>(mn);
    limits.interval_mn = static_cast<int>(mn);
  }
  limits.qsym_columns = env_long("MANG_MAX_QSYM_COLUMNS", limits.qsym_columns);
  return limits;
}

void check_guard(int m, int n, int cap, const char* what) {
  if (m < 1 || n < 1) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + ": m and n must be >= 1");
  }
  if (static_cast<long>(m) * n > cap) {
    throw Error(ErrorKind::SizeGuardExceeded,
                std::string(what) + ": m*n = " + std::to_string(m * n) +
                    " exceeds the guard " + std::to_string(cap) +
                    " (set MANG_MAX_MN to override)");
  }
}

}  // namespace mang

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mang {

enum class ErrorKind {
  MalformedDissection,
  SizeGuardExceeded,
  NotAQ0Diagonal,
  ArityMismatch,
  NotFinal,
  EmptyCrossing,
  ConstructionStuck,
  NotDyck,
  NoWitness,
  DecompositionFailure,
  StructureViolation,
  VerificationFailure,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above, so
/// callers (and tests) can branch on the kind instead of parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mang

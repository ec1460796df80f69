#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace exotic {

enum class ErrorKind {
  DivisionByZero,
  NonSquare,
  NotNilpotent,
  NotStable,
  Singular,
  NotInGIotaTheta,
  NotInA,
  SizeMismatch,
  UnequalTotals,
  RankMismatch,
  EmptyBipartition,
  NotDoubled,
  IndexOutOfRange,
  RangeError,
  AmbiguousAssignment,
  SizeGate,
  UsageError,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace exotic

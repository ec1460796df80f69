#include "exotic/error.hpp"

namespace exotic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotInGIotaTheta: return "NotInGIotaTheta";
    case ErrorKind::NotInA: return "NotInA";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::UnequalTotals: return "UnequalTotals";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::EmptyBipartition: return "EmptyBipartition";
    case ErrorKind::NotDoubled: return "NotDoubled";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::AmbiguousAssignment: return "AmbiguousAssignment";
    case ErrorKind::SizeGate: return "SizeGate";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace exotic

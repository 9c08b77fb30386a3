#include "arcs/errors.hpp"

namespace arcs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::SamePoint: return "SamePoint";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorKind::DegenerateSet: return "DegenerateSet";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotACandidate: return "NotACandidate";
    case ErrorKind::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case ErrorKind::BadProportions: return "BadProportions";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

}  // namespace arcs

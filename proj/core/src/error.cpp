#include "numsgp/error.hpp"

namespace numsgp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::NotCofinite: return "NotCofinite";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::GenusLimitExceeded: return "GenusLimitExceeded";
    case ErrorKind::IsFullSemigroup: return "IsFullSemigroup";
    case ErrorKind::NotAnExtension: return "NotAnExtension";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

NotClosedError::NotClosedError(std::uint64_t x, std::uint64_t y)
    : SemigroupError(ErrorKind::NotClosed,
                     "complement of the gap set is not closed: " + std::to_string(x) + " + " +
                         std::to_string(y) + " = " + std::to_string(x + y) + " is listed as a gap"),
      x_(x),
      y_(y) {}

void fail(ErrorKind kind, const std::string& what) { throw SemigroupError(kind, what); }

}  // namespace numsgp

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace numsgp {

enum class ErrorKind {
  EmptyGenerators,
  NotCofinite,
  Overflow,
  CapacityExceeded,
  NotClosed,
  NotMember,
  NonIntegerGenus,
  ZeroDivisor,
  ModulusMismatch,
  GenusLimitExceeded,
  IsFullSemigroup,
  NotAnExtension,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every domain failure raised by the library carries one of the kinds above.
class SemigroupError : public std::runtime_error {
 public:
  SemigroupError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by from_gaps: x and y are members whose sum is listed as a gap.
class NotClosedError : public SemigroupError {
 public:
  NotClosedError(std::uint64_t x, std::uint64_t y);

  std::uint64_t x() const noexcept { return x_; }
  std::uint64_t y() const noexcept { return y_; }

 private:
  std::uint64_t x_;
  std::uint64_t y_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace numsgp

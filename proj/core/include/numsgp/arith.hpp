#pragma once

#include <cstdint>

#include "numsgp/error.hpp"

// Checked 64-bit helpers. Every overflow raises ErrorKind::Overflow.

namespace numsgp::arith {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "unsigned addition overflow");
  return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "unsigned multiplication overflow");
  return r;
}

inline std::int64_t to_signed(std::uint64_t a) {
  if (a > static_cast<std::uint64_t>(INT64_MAX)) fail(ErrorKind::Overflow, "value exceeds signed range");
  return static_cast<std::int64_t>(a);
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "signed subtraction overflow");
  return r;
}

/// Exact ceiling of num/den for den > 0, including negative numerators.
constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  std::int64_t r = num % den;
  return (r > 0) ? q + 1 : q;
}

/// Exact floor of num/den for den > 0.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  std::int64_t r = num % den;
  return (r < 0) ? q - 1 : q;
}

}  // namespace numsgp::arith

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "numsgp/semigroup.hpp"

namespace numsgp {

/// Ap(S, n): for each residue i mod n, the least member of S congruent to i.
/// Stored residue-indexed, so omega(i) % n == i and omega(0) == 0.
class AperySet {
 public:
  /// Validates the shape (length n, omega(0) == 0, omega(i) = i mod n).
  /// Membership in some semigroup is not checked here.
  AperySet(Value n, std::vector<Value> omegas);

  Value modulus() const noexcept { return n_; }
  Value operator[](Value residue) const { return omegas_.at(residue); }
  std::span<const Value> omegas() const noexcept { return omegas_; }
  Value max() const noexcept;

  friend bool operator==(const AperySet&, const AperySet&) = default;

 private:
  Value n_;
  std::vector<Value> omegas_;
};

/// Throws NotMember unless n is a nonzero member of s.
AperySet apery(const NumericalSemigroup& s, Value n);

/// F(S) = max Ap(S, n) - n.
std::int64_t frobenius_from_apery(const AperySet& ap);

/// g(S) = (sum of Ap(S, n)) / n - (n - 1) / 2, evaluated exactly.
/// Throws NonIntegerGenus when the value is not a non-negative integer.
Value genus_from_apery(const AperySet& ap);

/// Rebuilds S from Ap(S, n): x is a member iff x >= omega(x mod n).
NumericalSemigroup semigroup_from_apery(const AperySet& ap);

}  // namespace numsgp

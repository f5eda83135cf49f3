#include "numsgp/apery.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "numsgp/arith.hpp"
#include "numsgp/error.hpp"

namespace numsgp {

AperySet::AperySet(Value n, std::vector<Value> omegas) : n_(n), omegas_(std::move(omegas)) {
  if (n_ == 0) fail(ErrorKind::InvalidArgument, "Apery modulus must be positive");
  if (omegas_.size() != n_) {
    fail(ErrorKind::InvalidArgument, "Apery set needs exactly n = " + std::to_string(n_) +
                                         " entries, got " + std::to_string(omegas_.size()));
  }
  if (omegas_[0] != 0) fail(ErrorKind::InvalidArgument, "omega(0) must be 0");
  for (Value i = 0; i < n_; ++i) {
    if (omegas_[i] % n_ != i) {
      fail(ErrorKind::InvalidArgument,
           "omega(" + std::to_string(i) + ") = " + std::to_string(omegas_[i]) +
               " is not congruent to " + std::to_string(i) + " mod " + std::to_string(n_));
    }
  }
}

Value AperySet::max() const noexcept { return *std::max_element(omegas_.begin(), omegas_.end()); }

AperySet apery(const NumericalSemigroup& s, Value n) {
  if (n == 0 || !s.contains(n)) {
    fail(ErrorKind::NotMember, std::to_string(n) + " is not a nonzero member of the semigroup");
  }
  std::vector<Value> omegas(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  Value remaining = n - 1;
  // Residue classes fill in by F + n at the latest.
  for (Value x = 1; remaining > 0; ++x) {
    const Value r = x % n;
    if (!seen[r] && s.contains(x)) {
      seen[r] = true;
      omegas[r] = x;
      --remaining;
    }
  }
  return AperySet(n, std::move(omegas));
}

std::int64_t frobenius_from_apery(const AperySet& ap) {
  return arith::sub(arith::to_signed(ap.max()), arith::to_signed(ap.modulus()));
}

Value genus_from_apery(const AperySet& ap) {
  const Value n = ap.modulus();
  Value sum = 0;
  for (Value w : ap.omegas()) sum = arith::add(sum, w);
  // g = sum/n - (n-1)/2 = (2*sum - n*(n-1)) / (2n)
  const Value twice_sum = arith::mul(sum, 2);
  const Value offset = arith::mul(n, n - 1);
  const Value den = arith::mul(n, 2);
  if (twice_sum < offset || (twice_sum - offset) % den != 0) {
    fail(ErrorKind::NonIntegerGenus, "Apery set yields a non-integer or negative genus");
  }
  return (twice_sum - offset) / den;
}

NumericalSemigroup semigroup_from_apery(const AperySet& ap) {
  const Value n = ap.modulus();
  const Value top = ap.max();
  if (top >= kMaxConductor + n) fail(ErrorKind::CapacityExceeded, "Apery set too large");
  // F = max omega - n, so the table up to max omega covers 0..F+1 whenever n >= 1.
  std::vector<bool> table(top + 1);
  for (Value x = 0; x <= top; ++x) table[x] = x >= ap[x % n];
  return NumericalSemigroup::from_closed_table(std::move(table));
}

}  // namespace numsgp

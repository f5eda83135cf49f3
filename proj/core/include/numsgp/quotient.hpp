#pragma once

#include <span>
#include <vector>

#include "numsgp/apery.hpp"
#include "numsgp/semigroup.hpp"

namespace numsgp {

/// Kunz coordinates with respect to n: kappa(i) with omega(i) = kappa(i)*n + i.
/// Zero coordinates are allowed.
class KunzVector {
 public:
  /// kappas.size() must be n - 1.
  KunzVector(Value n, std::vector<Value> kappas);

  Value modulus() const noexcept { return n_; }
  /// Coordinate for residue i, 1 <= i < n.
  Value operator[](Value i) const { return kappas_.at(i - 1); }
  std::span<const Value> kappas() const noexcept { return kappas_; }

  friend bool operator==(const KunzVector&, const KunzVector&) = default;
  friend auto operator<=>(const KunzVector&, const KunzVector&) = default;

 private:
  Value n_;
  std::vector<Value> kappas_;
};

/// {x : d*x in S}. Throws ZeroDivisor for d == 0.
NumericalSemigroup quotient(const NumericalSemigroup& s, Value d);

/// Ap(S/a, n) from Ap(S, n) alone:
///   omega'(i) = n * ceil((omega(a*i mod n) - a*i) / (a*n)) + i.
AperySet apery_of_quotient(const AperySet& ap, Value a);

/// Same, starting from S. Throws NotMember unless n is a nonzero member.
AperySet apery_of_quotient(const NumericalSemigroup& s, Value n, Value a);

NumericalSemigroup intersect(const NumericalSemigroup& s, const NumericalSemigroup& t);

/// Ap(S cap T, n) as the residue-wise maximum. Throws ModulusMismatch.
AperySet apery_of_intersection(const AperySet& lhs, const AperySet& rhs);

KunzVector kunz(const NumericalSemigroup& s, Value n);
KunzVector kunz(const AperySet& ap);
AperySet apery_from_kunz(const KunzVector& v);

/// Componentwise maximum. Throws ModulusMismatch.
KunzVector kunz_join(const KunzVector& u, const KunzVector& v);

/// The semigroup generated by n and every nonzero kappa(i)*n + i.
NumericalSemigroup semigroup_from_kunz(const KunzVector& v);

}  // namespace numsgp

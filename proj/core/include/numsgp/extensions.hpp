#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "numsgp/semigroup.hpp"

namespace numsgp {

inline constexpr Value kDefaultGenusLimit = 20;

/// A finite family of extensions of a base semigroup, deduplicated and kept
/// in canonical order (genus ascending, then minimal generators
/// lexicographically).
class ExtensionSet {
 public:
  ExtensionSet(NumericalSemigroup base, std::vector<NumericalSemigroup> members);

  const NumericalSemigroup& base() const noexcept { return base_; }
  std::span<const NumericalSemigroup> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const NumericalSemigroup& t) const;

  /// The member containing every other member outside `excluding`, if any.
  std::optional<NumericalSemigroup> greatest(
      std::span<const NumericalSemigroup> excluding = {}) const;
  /// The member contained in every other member outside `excluding`, if any.
  std::optional<NumericalSemigroup> least(
      std::span<const NumericalSemigroup> excluding = {}) const;

  friend bool operator==(const ExtensionSet& a, const ExtensionSet& b) {
    return a.base_ == b.base_ && a.members_ == b.members_;
  }

 private:
  NumericalSemigroup base_;
  std::vector<NumericalSemigroup> members_;
};

/// Canonical order used by ExtensionSet and the CLI.
bool canonical_less(const NumericalSemigroup& a, const NumericalSemigroup& b);

/// Intersection of base/d over d in divisors; N for an empty list.
NumericalSemigroup delta_of(const NumericalSemigroup& base, std::span<const Value> divisors);

/// Every arithmetic extension of base, i.e. every finite intersection of
/// quotients base/d. Throws GenusLimitExceeded when g(base) > genus_limit.
ExtensionSet arithmetic_extensions(const NumericalSemigroup& base,
                                   Value genus_limit = kDefaultGenusLimit);

/// The smallest arithmetic extension other than base itself: base together
/// with its fundamental gaps. Throws IsFullSemigroup for N.
NumericalSemigroup min_proper_arithmetic(const NumericalSemigroup& base);

/// True exactly for the six semigroups all of whose extensions are arithmetic.
bool has_only_arithmetic_extensions(const NumericalSemigroup& s);

/// Every numerical semigroup containing base, by scanning subsets of its gaps.
ExtensionSet enumerate_oversemigroups(const NumericalSemigroup& base,
                                      Value genus_limit = kDefaultGenusLimit);

/// Decides whether t is a finite intersection of quotients of base.
/// Throws NotAnExtension when base is not contained in t.
bool is_arithmetic_extension(const NumericalSemigroup& base, const NumericalSemigroup& t);

}  // namespace numsgp

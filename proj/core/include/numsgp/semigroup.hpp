#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace numsgp {

using Value = std::uint64_t;

/// Largest conductor (F + 1) for which a dense membership table is built.
inline constexpr Value kMaxConductor = Value{1} << 28;

namespace detail {
struct GeneratorCache;
}

/// A numerical semigroup S: a cofinite submonoid of (N, +).
///
/// Stored as a dense membership table over 0..F+1; every integer above the
/// Frobenius number F is a member. Values are immutable and cheap to copy.
/// Equality compares gap sets, so semigroups built from different generator
/// lists compare equal when they are the same set.
class NumericalSemigroup {
 public:
  /// N itself: no gaps, F = -1, multiplicity 1.
  NumericalSemigroup();

  static NumericalSemigroup full() { return NumericalSemigroup(); }

  /// Wraps a membership table for 0..table.size()-1; integers beyond the
  /// table are members. The caller guarantees additive closure and
  /// table[0] == true; only the trailing run of members is trimmed.
  static NumericalSemigroup from_closed_table(std::vector<bool> table);

  bool contains(Value x) const noexcept {
    return x >= table_.size() || table_[static_cast<std::size_t>(x)];
  }

  Value multiplicity() const noexcept { return multiplicity_; }
  std::int64_t frobenius() const noexcept { return frobenius_; }
  Value genus() const noexcept { return genus_; }
  Value conductor() const noexcept { return static_cast<Value>(frobenius_ + 1); }
  bool is_full() const noexcept { return frobenius_ < 0; }

  /// Ascending list of non-members.
  std::vector<Value> gaps() const;

  /// The unique minimal system of generators, ascending; computed once.
  const std::vector<Value>& min_generators() const;

  /// Membership table over 0..F+1.
  const std::vector<bool>& table() const noexcept { return table_; }

  bool is_subset_of(const NumericalSemigroup& other) const noexcept;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.table_ == b.table_;
  }

  std::size_t hash() const noexcept;

 private:
  explicit NumericalSemigroup(std::vector<bool> table);

  std::vector<bool> table_;
  Value multiplicity_ = 1;
  std::int64_t frobenius_ = -1;
  Value genus_ = 0;
  std::shared_ptr<detail::GeneratorCache> cache_;
};

/// The semigroup generated by gens. Errors: EmptyGenerators, a zero
/// generator (InvalidArgument), NotCofinite when gcd(gens) != 1, Overflow,
/// CapacityExceeded when the conductor exceeds kMaxConductor.
NumericalSemigroup from_generators(std::span<const Value> gens);
NumericalSemigroup from_generators(std::initializer_list<Value> gens);

/// N minus gaps. Throws NotClosedError with a witness pair when the
/// complement is not additively closed.
NumericalSemigroup from_gaps(std::span<const Value> gaps);
NumericalSemigroup from_gaps(std::initializer_list<Value> gaps);

/// Gaps x with 2x and 3x in S.
std::vector<Value> fundamental_gaps(const NumericalSemigroup& s);

}  // namespace numsgp

template <>
struct std::hash<numsgp::NumericalSemigroup> {
  std::size_t operator()(const numsgp::NumericalSemigroup& s) const noexcept { return s.hash(); }
};

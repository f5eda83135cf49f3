#include "numsgp/extensions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "numsgp/apery.hpp"
#include "numsgp/error.hpp"
#include "numsgp/quotient.hpp"

namespace numsgp {

namespace {

void check_genus(const NumericalSemigroup& s, Value limit) {
  if (s.genus() > limit) {
    fail(ErrorKind::GenusLimitExceeded, "genus " + std::to_string(s.genus()) +
                                            " exceeds the limit " + std::to_string(limit));
  }
}

bool is_excluded(const NumericalSemigroup& s, std::span<const NumericalSemigroup> excluding) {
  return std::find(excluding.begin(), excluding.end(), s) != excluding.end();
}

}  // namespace

bool canonical_less(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (a.genus() != b.genus()) return a.genus() < b.genus();
  return a.min_generators() < b.min_generators();
}

ExtensionSet::ExtensionSet(NumericalSemigroup base, std::vector<NumericalSemigroup> members)
    : base_(std::move(base)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ExtensionSet::contains(const NumericalSemigroup& t) const {
  return std::binary_search(members_.begin(), members_.end(), t, canonical_less);
}

std::optional<NumericalSemigroup> ExtensionSet::greatest(
    std::span<const NumericalSemigroup> excluding) const {
  for (const auto& candidate : members_) {
    if (is_excluded(candidate, excluding)) continue;
    bool above_all = std::all_of(members_.begin(), members_.end(), [&](const auto& other) {
      return is_excluded(other, excluding) || other.is_subset_of(candidate);
    });
    if (above_all) return candidate;
  }
  return std::nullopt;
}

std::optional<NumericalSemigroup> ExtensionSet::least(
    std::span<const NumericalSemigroup> excluding) const {
  for (const auto& candidate : members_) {
    if (is_excluded(candidate, excluding)) continue;
    bool below_all = std::all_of(members_.begin(), members_.end(), [&](const auto& other) {
      return is_excluded(other, excluding) || candidate.is_subset_of(other);
    });
    if (below_all) return candidate;
  }
  return std::nullopt;
}

NumericalSemigroup delta_of(const NumericalSemigroup& base, std::span<const Value> divisors) {
  NumericalSemigroup out;
  for (Value d : divisors) out = intersect(out, quotient(base, d));
  return out;
}

NumericalSemigroup min_proper_arithmetic(const NumericalSemigroup& base) {
  if (base.is_full()) fail(ErrorKind::IsFullSemigroup, "N has no proper extension");
  std::vector<bool> table = base.table();
  for (Value x : fundamental_gaps(base)) table[x] = true;
  return NumericalSemigroup::from_closed_table(std::move(table));
}

ExtensionSet arithmetic_extensions(const NumericalSemigroup& base, Value genus_limit) {
  if (base.is_full()) return ExtensionSet(base, {base});
  check_genus(base, genus_limit);

  const NumericalSemigroup lower = min_proper_arithmetic(base);
  const Value m = lower.multiplicity();

  // Quotients via Ap(base, m(base)), then coordinates w.r.t. m.
  const AperySet base_apery = apery(base, base.multiplicity());

  // Gaps of lower except 1; the rest give seeded semigroups.
  std::vector<std::vector<Value>> pool;
  std::set<std::vector<Value>> seen;
  for (Value a : lower.gaps()) {
    if (a == 1) continue;
    const NumericalSemigroup q = semigroup_from_apery(apery_of_quotient(base_apery, a));
    const KunzVector coords = kunz(q, m);
    std::vector<Value> v(coords.kappas().begin(), coords.kappas().end());
    if (seen.insert(v).second) pool.push_back(std::move(v));
  }

  // Closure under componentwise max: each element is joined with every
  // earlier one, so every pair is visited once.
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Value> joined(pool[i].size());
      for (std::size_t k = 0; k < joined.size(); ++k) joined[k] = std::max(pool[i][k], pool[j][k]);
      if (seen.insert(joined).second) pool.push_back(std::move(joined));
    }
  }

  std::vector<NumericalSemigroup> members{NumericalSemigroup::full(), from_generators({2, 3}), base};
  members.reserve(members.size() + pool.size());
  for (auto& v : pool) members.push_back(semigroup_from_kunz(KunzVector(m, std::move(v))));
  return ExtensionSet(base, std::move(members));
}

bool has_only_arithmetic_extensions(const NumericalSemigroup& s) {
  static const std::array<std::vector<Value>, 6> kGapSets = {{
      {},
      {1},
      {1, 2},
      {1, 3},
      {1, 2, 4},
      {1, 2, 3, 6},
  }};
  const auto gaps = s.gaps();
  return std::find(kGapSets.begin(), kGapSets.end(), gaps) != kGapSets.end();
}

ExtensionSet enumerate_oversemigroups(const NumericalSemigroup& base, Value genus_limit) {
  check_genus(base, std::min<Value>(genus_limit, 63));
  const std::vector<Value> gaps = base.gaps();
  const std::size_t g = gaps.size();
  const Value size = base.conductor() + 1;

  // index[x] = position of x among the gaps of base, or -1 for members.
  std::vector<int> index(size, -1);
  for (std::size_t i = 0; i < g; ++i) index[gaps[i]] = static_cast<int>(i);

  std::vector<NumericalSemigroup> found;
  const std::uint64_t subsets = std::uint64_t{1} << g;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    // mask selects the gaps that stay gaps of the oversemigroup.
    auto is_gap = [&](Value x) {
      return index[x] >= 0 && ((mask >> index[x]) & 1U) != 0;
    };
    bool closed = true;
    for (std::size_t i = 0; i < g && closed; ++i) {
      if (((mask >> i) & 1U) == 0) continue;
      const Value b = gaps[i];
      for (Value x = 1; 2 * x <= b; ++x) {
        if (!is_gap(x) && !is_gap(b - x)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<bool> table(size);
    for (Value x = 0; x < size; ++x) table[x] = !is_gap(x);
    found.push_back(NumericalSemigroup::from_closed_table(std::move(table)));
  }
  return ExtensionSet(base, std::move(found));
}

bool is_arithmetic_extension(const NumericalSemigroup& base, const NumericalSemigroup& t) {
  if (!base.is_subset_of(t)) {
    fail(ErrorKind::NotAnExtension, "the candidate does not contain the base semigroup");
  }
  // Intersect base/d over every d <= F(base) + 1 with t inside base/d.
  const auto top = static_cast<Value>(base.frobenius() + 1);
  const std::vector<Value> members_of_t = [&] {
    std::vector<Value> out;
    for (Value x = 1; x <= top; ++x) {
      if (t.contains(x)) out.push_back(x);
    }
    return out;
  }();

  NumericalSemigroup closure;
  for (Value d = 1; d <= top; ++d) {
    bool t_inside = std::all_of(members_of_t.begin(), members_of_t.end(), [&](Value x) {
      return x > top || d * x >= top || base.contains(d * x);
    });
    if (t_inside) closure = intersect(closure, quotient(base, d));
  }
  return closure == t;
}

}  // namespace numsgp

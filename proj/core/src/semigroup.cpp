#include "numsgp/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "numsgp/arith.hpp"
#include "numsgp/error.hpp"

namespace numsgp {

namespace detail {
struct GeneratorCache {
  std::once_flag once;
  std::vector<Value> gens;
};
}  // namespace detail

namespace {

std::vector<bool> trim(std::vector<bool> table) {
  while (!table.empty() && table.back()) table.pop_back();
  // Keep one trailing member so the table always spans 0..F+1.
  table.push_back(true);
  return table;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup()
    : table_{true}, cache_(std::make_shared<detail::GeneratorCache>()) {}

NumericalSemigroup::NumericalSemigroup(std::vector<bool> table)
    : table_(trim(std::move(table))), cache_(std::make_shared<detail::GeneratorCache>()) {
  if (!table_.front()) {
    // table[0] == false can only come from a caller bug; 0 is always a member.
    fail(ErrorKind::InvalidArgument, "membership table must contain 0");
  }
  frobenius_ = static_cast<std::int64_t>(table_.size()) - 2;
  genus_ = static_cast<Value>(std::count(table_.begin(), table_.end(), false));
  multiplicity_ = 1;
  while (!contains(multiplicity_)) ++multiplicity_;
}

NumericalSemigroup NumericalSemigroup::from_closed_table(std::vector<bool> table) {
  if (table.empty()) table.push_back(true);
  return NumericalSemigroup(std::move(table));
}

std::vector<Value> NumericalSemigroup::gaps() const {
  std::vector<Value> out;
  out.reserve(genus_);
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (!table_[x]) out.push_back(x);
  }
  return out;
}

const std::vector<Value>& NumericalSemigroup::min_generators() const {
  std::call_once(cache_->once, [this] {
    // m plus each w in Ap(S, m) with w - w' outside S for every smaller w' there.
    const Value m = multiplicity_;
    std::vector<Value> omegas(m, 0);
    Value found = 1;
    for (Value x = 1; found < m; ++x) {
      if (contains(x) && omegas[x % m] == 0 && x % m != 0) {
        omegas[x % m] = x;
        ++found;
      }
    }
    std::vector<Value> sorted(omegas.begin() + 1, omegas.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Value> gens{m};
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const Value w = sorted[i];
      bool minimal = true;
      for (std::size_t j = 0; j < i && minimal; ++j) {
        if (contains(w - sorted[j])) minimal = false;
      }
      if (minimal) gens.push_back(w);
    }
    std::sort(gens.begin(), gens.end());
    cache_->gens = std::move(gens);
  });
  return cache_->gens;
}

bool NumericalSemigroup::is_subset_of(const NumericalSemigroup& other) const noexcept {
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (table_[x] && !other.contains(x)) return false;
  }
  // Beyond our table everything is ours; other must be full there too.
  return other.frobenius() < static_cast<std::int64_t>(table_.size());
}

std::size_t NumericalSemigroup::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (!table_[x]) {
      h ^= std::hash<std::size_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

NumericalSemigroup from_generators(std::span<const Value> gens) {
  if (gens.empty()) fail(ErrorKind::EmptyGenerators, "generator list is empty");
  std::vector<Value> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() == 0) fail(ErrorKind::InvalidArgument, "generators must be positive");

  Value g = 0;
  for (Value x : sorted) g = std::gcd(g, x);
  if (g != 1) {
    fail(ErrorKind::NotCofinite,
         "gcd of generators is " + std::to_string(g) + ", complement is infinite");
  }
  const Value m = sorted.front();
  if (m == 1) return NumericalSemigroup::full();
  if (m > kMaxConductor) fail(ErrorKind::CapacityExceeded, "multiplicity too large");

  // Ap(S, m) as shortest paths on residues mod m with edge weights gens.
  constexpr Value kUnreached = ~Value{0};
  std::vector<Value> dist(m, kUnreached);
  dist[0] = 0;
  using Item = std::pair<Value, Value>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[r]) continue;
    for (std::size_t k = 1; k < sorted.size(); ++k) {
      const Value nd = arith::add(d, sorted[k]);
      const Value nr = (r + sorted[k] % m) % m;
      if (nd < dist[nr]) {
        dist[nr] = nd;
        pq.emplace(nd, nr);
      }
    }
  }

  const Value max_omega = *std::max_element(dist.begin(), dist.end());
  // Conductor F + 1 = max omega - m + 1.
  const Value conductor = max_omega - m + 1;
  if (conductor > kMaxConductor) {
    fail(ErrorKind::CapacityExceeded,
         "conductor " + std::to_string(conductor) + " exceeds the table limit");
  }
  std::vector<bool> table(conductor + 1);
  for (Value x = 0; x <= conductor; ++x) table[x] = x >= dist[x % m];
  return NumericalSemigroup::from_closed_table(std::move(table));
}

NumericalSemigroup from_generators(std::initializer_list<Value> gens) {
  return from_generators(std::span<const Value>(gens.begin(), gens.size()));
}

NumericalSemigroup from_gaps(std::span<const Value> gaps) {
  Value top = 0;
  for (Value x : gaps) {
    if (x == 0) fail(ErrorKind::InvalidArgument, "0 cannot be a gap");
    top = std::max(top, x);
  }
  if (top >= kMaxConductor) fail(ErrorKind::CapacityExceeded, "gap exceeds the table limit");
  std::vector<Value> sorted(gaps.begin(), gaps.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> table(top + 2, true);
  for (Value x : sorted) table[x] = false;
  // Only sums landing on a gap can break closure.
  for (Value gap : sorted) {
    for (Value x = 1; 2 * x <= gap; ++x) {
      if (table[x] && table[gap - x]) throw NotClosedError(x, gap - x);
    }
  }
  return NumericalSemigroup::from_closed_table(std::move(table));
}

NumericalSemigroup from_gaps(std::initializer_list<Value> gaps) {
  return from_gaps(std::span<const Value>(gaps.begin(), gaps.size()));
}

std::vector<Value> fundamental_gaps(const NumericalSemigroup& s) {
  std::vector<Value> out;
  for (Value x : s.gaps()) {
    if (s.contains(2 * x) && s.contains(3 * x)) out.push_back(x);
  }
  return out;
}

}  // namespace numsgp

#pragma once

// Brute-force reference implementations for tests. Nothing here calls into
// the library; semigroups are plain membership vectors over 0..limit-1 with
// every integer at or beyond limit treated as a member.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Value = std::uint64_t;

struct Members {
  std::vector<bool> in;  // in[x] for x < in.size(); larger x are members

  bool contains(Value x) const { return x >= in.size() || in[x]; }

  std::vector<Value> gaps() const {
    std::vector<Value> out;
    for (Value x = 0; x < in.size(); ++x) {
      if (!in[x]) out.push_back(x);
    }
    return out;
  }

  std::int64_t frobenius() const {
    auto g = gaps();
    return g.empty() ? -1 : static_cast<std::int64_t>(g.back());
  }

  Value genus() const { return gaps().size(); }

  Value multiplicity() const {
    Value x = 1;
    while (!contains(x)) ++x;
    return x;
  }
};

/// Dynamic-programming sieve: x is a member iff x - g is, for some generator g.
/// limit must exceed the Frobenius number.
inline Members sieve(const std::vector<Value>& gens, Value limit) {
  Members m;
  m.in.assign(limit, false);
  m.in[0] = true;
  for (Value x = 1; x < limit; ++x) {
    for (Value g : gens) {
      if (g <= x && m.in[x - g]) {
        m.in[x] = true;
        break;
      }
    }
  }
  return m;
}

inline Members from_gap_list(const std::vector<Value>& gaps) {
  Value top = gaps.empty() ? 0 : *std::max_element(gaps.begin(), gaps.end());
  Members m;
  m.in.assign(top + 1, true);
  for (Value g : gaps) m.in[g] = false;
  return m;
}

inline bool is_closed(const Members& m) {
  if (!m.contains(0)) return false;
  for (Value x = 1; x < m.in.size(); ++x) {
    for (Value y = x; x + y < m.in.size(); ++y) {
      if (m.contains(x) && m.contains(y) && !m.contains(x + y)) return false;
    }
  }
  return true;
}

inline Members quotient(const Members& s, Value d) {
  Members q;
  q.in.resize(s.in.size());
  for (Value x = 0; x < s.in.size(); ++x) q.in[x] = s.contains(d * x);
  return q;
}

inline Members intersect(const Members& s, const Members& t) {
  Members out;
  out.in.resize(std::max(s.in.size(), t.in.size()));
  for (Value x = 0; x < out.in.size(); ++x) out.in[x] = s.contains(x) && t.contains(x);
  return out;
}

/// Least member of each residue class mod n, by linear scan.
inline std::vector<Value> apery(const Members& s, Value n) {
  std::vector<Value> out(n);
  for (Value i = 0; i < n; ++i) {
    Value x = i;
    while (!s.contains(x)) x += n;
    out[i] = x;
  }
  return out;
}

/// Nonzero members not expressible as a sum of two nonzero members,
/// scanning every member below F + 2m.
inline std::vector<Value> minimal_generators(const Members& s) {
  std::vector<Value> out;
  const Value m = s.multiplicity();
  const Value top = static_cast<Value>(s.frobenius() + 1) + 2 * m;
  for (Value x = 1; x <= top; ++x) {
    if (!s.contains(x)) continue;
    bool split = false;
    for (Value y = 1; y < x && !split; ++y) split = s.contains(y) && s.contains(x - y);
    if (!split) out.push_back(x);
  }
  return out;
}

inline std::vector<Value> fundamental_gaps(const Members& s) {
  std::vector<Value> out;
  for (Value x : s.gaps()) {
    bool all = true;
    // k*x for every k >= 2 up to past the conductor.
    for (Value k = 2; k * x <= s.in.size() + x; ++k) all = all && s.contains(k * x);
    if (all) out.push_back(x);
  }
  return out;
}

inline bool same_set(const Members& a, const Members& b) { return a.gaps() == b.gaps(); }

/// Gap sets of every numerical semigroup whose gaps lie in 1..max_gap.
inline std::vector<std::vector<Value>> all_semigroups_with_gaps_below(Value max_gap) {
  std::vector<std::vector<Value>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << max_gap); ++mask) {
    std::vector<Value> gaps;
    for (Value x = 1; x <= max_gap; ++x) {
      if ((mask >> (x - 1)) & 1U) gaps.push_back(x);
    }
    if (is_closed(from_gap_list(gaps))) out.push_back(std::move(gaps));
  }
  return out;
}

/// Every semigroup of genus <= max_genus (gaps are below 2 * genus).
inline std::vector<std::vector<Value>> all_semigroups_up_to_genus(Value max_genus) {
  std::vector<std::vector<Value>> out;
  // Walk the tree: children remove a minimal generator above the Frobenius number.
  std::vector<std::vector<Value>> level{{}};
  for (Value g = 0; g <= max_genus; ++g) {
    std::vector<std::vector<Value>> next;
    for (const auto& gaps : level) {
      out.push_back(gaps);
      if (g == max_genus) continue;
      const Members s = from_gap_list(gaps);
      const std::int64_t f = s.frobenius();
      for (Value x : minimal_generators(s)) {
        if (static_cast<std::int64_t>(x) <= f) continue;
        auto child = gaps;
        child.push_back(x);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return out;
}

/// Random descent in the semigroup tree to the target genus.
/// Children of S are S minus a minimal generator larger than F(S).
inline std::vector<Value> random_gaps(std::mt19937_64& rng, Value genus) {
  std::vector<Value> gaps;
  while (gaps.size() < genus) {
    const Members s = from_gap_list(gaps);
    const std::int64_t f = s.frobenius();
    std::vector<Value> candidates;
    for (Value x : minimal_generators(s)) {
      if (static_cast<std::int64_t>(x) > f) candidates.push_back(x);
    }
    if (candidates.empty()) {
      // Leaf of the tree (no generator above F); start over.
      gaps.clear();
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    gaps.push_back(candidates[pick(rng)]);
  }
  return gaps;
}

/// Random generator list with gcd 1 whose semigroup has Frobenius number <= max_frobenius.
inline std::vector<Value> random_generators(std::mt19937_64& rng, Value max_frobenius) {
  std::uniform_int_distribution<Value> mult(2, 30);
  std::uniform_int_distribution<int> extra(1, 4);
  for (;;) {
    const Value m = mult(rng);
    std::uniform_int_distribution<Value> span(m + 1, 4 * m);
    std::vector<Value> gens{m};
    const int k = extra(rng);
    for (int i = 0; i < k; ++i) gens.push_back(span(rng));
    Value g = 0;
    for (Value x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    // A run of m members above the frobenius bound keeps every larger integer in.
    const Members s = sieve(gens, max_frobenius + 2 + m);
    if (s.frobenius() <= static_cast<std::int64_t>(max_frobenius)) return gens;
  }
}

/// Every numerical semigroup containing s, as gap sets, by subset scan.
inline std::vector<std::vector<Value>> oversemigroups(const Members& s) {
  const auto gaps = s.gaps();
  std::vector<std::vector<Value>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps.size()); ++mask) {
    std::vector<Value> keep;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if ((mask >> i) & 1U) keep.push_back(gaps[i]);
    }
    if (is_closed(from_gap_list(keep))) out.push_back(std::move(keep));
  }
  return out;
}

/// Every arithmetic extension of s, by intersecting quotients over every
/// subset of its gaps (exponential; small genus only).
inline std::set<std::vector<Value>> arithmetic_extensions_by_subsets(const Members& s) {
  const auto gaps = s.gaps();
  std::vector<Members> quotients;
  for (Value d : gaps) quotients.push_back(quotient(s, d));
  std::set<std::vector<Value>> out{{}};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << gaps.size()); ++mask) {
    Members acc;
    acc.in.assign(1, true);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if ((mask >> i) & 1U) acc = intersect(acc, quotients[i]);
    }
    out.insert(acc.gaps());
  }
  return out;
}

}  // namespace oracle

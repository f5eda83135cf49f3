#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "numsgp/apery.hpp"
#include "numsgp/semigroup.hpp"

namespace numsgp {

/// The inequality a*x mod b <= c*x with a, b, c > 0.
struct PmInequality {
  Value a;
  Value b;
  Value c;

  PmInequality(Value a, Value b, Value c);
};

/// Intersection of <a, a+1>/d over the listed divisors; a >= 2.
struct TSemigroupSpec {
  Value a;
  std::vector<Value> divisors;

  TSemigroupSpec(Value a, std::vector<Value> divisors);
};

struct TSemigroup {
  NumericalSemigroup semigroup;
  AperySet apery;  // with respect to a
  std::int64_t frobenius;
  Value genus;
};

/// Solutions of the inequality over N.
NumericalSemigroup pm_semigroup(const PmInequality& ineq);

/// Ap(<a, a+1>, a) = {0, a+1, 2(a+1), ..., (a-1)(a+1)}.
AperySet consecutive_apery(Value a);

/// <a, a+1>/b, from the explicit Apery set of <a, a+1>.
NumericalSemigroup pm_quotient(Value a, Value b);

/// Closed forms for F and g of <a, a+1>/b. F is -1 when b is in <a, a+1>.
std::int64_t pm_frobenius(Value a, Value b);
Value pm_genus(Value a, Value b);

TSemigroup t_semigroup(const TSemigroupSpec& spec);

/// Lexicographically smallest (a, b) with 2 <= a <= a_max, 1 <= b <= b_max
/// and <a, a+1>/b equal to the solution set of ineq, if one exists there.
std::optional<std::pair<Value, Value>> pm_to_quotient_search(const PmInequality& ineq,
                                                             Value a_max, Value b_max);

}  // namespace numsgp

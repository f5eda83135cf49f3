#include "numsgp/pm.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "numsgp/arith.hpp"
#include "numsgp/error.hpp"
#include "numsgp/quotient.hpp"

namespace numsgp {

namespace {

void require_consecutive_base(Value a) {
  if (a < 2) fail(ErrorKind::InvalidArgument, "a must be at least 2, got " + std::to_string(a));
}

// ceil(((b*i mod a)(a+1) - b*i) / (a*b)), the i-th Kunz coordinate of <a,a+1>/b.
Value consecutive_kappa(Value a, Value b, Value i) {
  const Value bi = arith::mul(b, i);
  const Value lifted = arith::mul(bi % a, a + 1);
  const std::int64_t num = arith::sub(arith::to_signed(lifted), arith::to_signed(bi));
  const std::int64_t den = arith::to_signed(arith::mul(a, b));
  return static_cast<Value>(arith::ceil_div(num, den));
}

}  // namespace

PmInequality::PmInequality(Value a_, Value b_, Value c_) : a(a_), b(b_), c(c_) {
  if (a == 0 || b == 0 || c == 0) {
    fail(ErrorKind::InvalidArgument, "inequality coefficients must be positive");
  }
}

TSemigroupSpec::TSemigroupSpec(Value a_, std::vector<Value> divisors_)
    : a(a_), divisors(std::move(divisors_)) {
  require_consecutive_base(a);
  if (divisors.empty()) fail(ErrorKind::InvalidArgument, "divisor list is empty");
  if (std::find(divisors.begin(), divisors.end(), Value{0}) != divisors.end()) {
    fail(ErrorKind::ZeroDivisor, "divisors must be positive");
  }
}

NumericalSemigroup pm_semigroup(const PmInequality& ineq) {
  // Every x >= ceil((b-1)/c) is a solution: a*x mod b <= b-1 <= c*x.
  const Value bound = (ineq.b - 1) / ineq.c + ((ineq.b - 1) % ineq.c != 0 ? 1 : 0);
  if (bound > kMaxConductor) fail(ErrorKind::CapacityExceeded, "conductor bound too large");
  std::vector<bool> table(bound + 1, true);
  for (Value x = 1; x < bound; ++x) {
    table[x] = arith::mul(ineq.a, x) % ineq.b <= arith::mul(ineq.c, x);
  }
  return NumericalSemigroup::from_closed_table(std::move(table));
}

AperySet consecutive_apery(Value a) {
  require_consecutive_base(a);
  std::vector<Value> omegas(a);
  for (Value i = 0; i < a; ++i) omegas[i] = arith::mul(i, a + 1);
  return AperySet(a, std::move(omegas));
}

NumericalSemigroup pm_quotient(Value a, Value b) {
  return semigroup_from_apery(apery_of_quotient(consecutive_apery(a), b));
}

std::int64_t pm_frobenius(Value a, Value b) {
  require_consecutive_base(a);
  if (b == 0) fail(ErrorKind::ZeroDivisor, "quotient by 0");
  std::int64_t best = 0;
  for (Value i = 1; i < a; ++i) {
    const Value omega = arith::add(arith::mul(consecutive_kappa(a, b, i), a), i);
    best = std::max(best, arith::to_signed(omega));
  }
  // All coordinates vanish exactly when b is in <a, a+1>; then this is a-1-a = -1.
  return arith::sub(best, arith::to_signed(a));
}

Value pm_genus(Value a, Value b) {
  require_consecutive_base(a);
  if (b == 0) fail(ErrorKind::ZeroDivisor, "quotient by 0");
  Value total = 0;
  for (Value i = 1; i < a; ++i) total = arith::add(total, consecutive_kappa(a, b, i));
  return total;
}

TSemigroup t_semigroup(const TSemigroupSpec& spec) {
  const AperySet base = consecutive_apery(spec.a);
  AperySet joint = apery_of_quotient(base, spec.divisors.front());
  for (std::size_t k = 1; k < spec.divisors.size(); ++k) {
    joint = apery_of_intersection(joint, apery_of_quotient(base, spec.divisors[k]));
  }
  const std::int64_t f = frobenius_from_apery(joint);
  const Value g = genus_from_apery(joint);
  return TSemigroup{semigroup_from_apery(joint), std::move(joint), f, g};
}

std::optional<std::pair<Value, Value>> pm_to_quotient_search(const PmInequality& ineq,
                                                             Value a_max, Value b_max) {
  const NumericalSemigroup target = pm_semigroup(ineq);
  for (Value a = 2; a <= a_max; ++a) {
    for (Value b = 1; b <= b_max; ++b) {
      // Compare F and g before building the quotient.
      if (pm_frobenius(a, b) != target.frobenius() || pm_genus(a, b) != target.genus()) continue;
      if (pm_quotient(a, b) == target) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace numsgp

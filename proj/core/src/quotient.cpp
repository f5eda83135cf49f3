#include "numsgp/quotient.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "numsgp/arith.hpp"
#include "numsgp/error.hpp"

namespace numsgp {

namespace {

void require_same_modulus(Value lhs, Value rhs) {
  if (lhs != rhs) {
    fail(ErrorKind::ModulusMismatch,
         "moduli differ: " + std::to_string(lhs) + " vs " + std::to_string(rhs));
  }
}

}  // namespace

KunzVector::KunzVector(Value n, std::vector<Value> kappas) : n_(n), kappas_(std::move(kappas)) {
  if (n_ == 0) fail(ErrorKind::InvalidArgument, "Kunz modulus must be positive");
  if (kappas_.size() != n_ - 1) {
    fail(ErrorKind::InvalidArgument, "Kunz vector for n = " + std::to_string(n_) + " needs " +
                                         std::to_string(n_ - 1) + " coordinates");
  }
}

NumericalSemigroup quotient(const NumericalSemigroup& s, Value d) {
  if (d == 0) fail(ErrorKind::ZeroDivisor, "quotient by 0");
  const Value size = s.conductor() + 1;
  std::vector<bool> table(size);
  const Value conductor = s.conductor();
  for (Value x = 0; x < size; ++x) {
    // d*x beyond F is a member; test without forming the product.
    table[x] = (x != 0 && d > conductor / x) || s.contains(d * x);
  }
  return NumericalSemigroup::from_closed_table(std::move(table));
}

AperySet apery_of_quotient(const AperySet& ap, Value a) {
  if (a == 0) fail(ErrorKind::ZeroDivisor, "quotient by 0");
  const Value n = ap.modulus();
  const std::int64_t an = arith::to_signed(arith::mul(a, n));
  std::vector<Value> omegas(n, 0);
  for (Value i = 1; i < n; ++i) {
    const Value ai = arith::mul(a, i);
    const std::int64_t num =
        arith::sub(arith::to_signed(ap[ai % n]), arith::to_signed(ai));
    // num > -a*n because omega >= 0 and a*i < a*n, so kappa >= 0.
    const auto kappa = static_cast<Value>(arith::ceil_div(num, an));
    omegas[i] = arith::add(arith::mul(kappa, n), i);
  }
  return AperySet(n, std::move(omegas));
}

AperySet apery_of_quotient(const NumericalSemigroup& s, Value n, Value a) {
  return apery_of_quotient(apery(s, n), a);
}

NumericalSemigroup intersect(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  const Value size = std::max(s.conductor(), t.conductor()) + 1;
  std::vector<bool> table(size);
  for (Value x = 0; x < size; ++x) table[x] = s.contains(x) && t.contains(x);
  return NumericalSemigroup::from_closed_table(std::move(table));
}

AperySet apery_of_intersection(const AperySet& lhs, const AperySet& rhs) {
  require_same_modulus(lhs.modulus(), rhs.modulus());
  std::vector<Value> omegas(lhs.modulus());
  for (Value i = 0; i < lhs.modulus(); ++i) omegas[i] = std::max(lhs[i], rhs[i]);
  return AperySet(lhs.modulus(), std::move(omegas));
}

KunzVector kunz(const AperySet& ap) {
  const Value n = ap.modulus();
  std::vector<Value> kappas(n - 1);
  for (Value i = 1; i < n; ++i) kappas[i - 1] = (ap[i] - i) / n;
  return KunzVector(n, std::move(kappas));
}

KunzVector kunz(const NumericalSemigroup& s, Value n) { return kunz(apery(s, n)); }

AperySet apery_from_kunz(const KunzVector& v) {
  const Value n = v.modulus();
  std::vector<Value> omegas(n, 0);
  for (Value i = 1; i < n; ++i) omegas[i] = arith::add(arith::mul(v[i], n), i);
  return AperySet(n, std::move(omegas));
}

KunzVector kunz_join(const KunzVector& u, const KunzVector& v) {
  require_same_modulus(u.modulus(), v.modulus());
  std::vector<Value> out(u.kappas().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(u.kappas()[i], v.kappas()[i]);
  return KunzVector(u.modulus(), std::move(out));
}

NumericalSemigroup semigroup_from_kunz(const KunzVector& v) {
  const Value n = v.modulus();
  std::vector<Value> gens{n};
  for (Value i = 1; i < n; ++i) gens.push_back(arith::add(arith::mul(v[i], n), i));
  return from_generators(gens);
}

}  // namespace numsgp

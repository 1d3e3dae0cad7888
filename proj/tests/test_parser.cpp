#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "eugb/parser.hpp"
#include "helpers.hpp"

using namespace eugb;
using namespace eugb::testing;

namespace {

const char* kExample =
    "ring: integers\n"
    "vars: a,b,c,d\n"
    "order: degrevlex\n"
    "2*a*b*c*d-2\n"
    "a*b*c+2*a*b*d+a*c*d+b*c*d\n"
    "a*b+b*c+a*d+c*d\n"
    "a+b+c+d\n";

ParseError parseFailure(std::string_view text) {
  try {
    parseProblem(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseError(0, 0, "");
}

}  // namespace

TEST(Parser, Example) {
  const ProblemFile p = parseProblem(kExample);
  EXPECT_EQ(p.ring, RingKind::Integers);
  EXPECT_EQ(p.variables, (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(p.order, OrderKind::DegRevLex);
  const ContextPtr ctx = makeContext(p.ring, p.variables, p.order);
  const std::vector<Polynomial> F = generators(p, ctx);
  ASSERT_EQ(F.size(), 4u);
  EXPECT_EQ(render(F[0]), "2*a*b*c*d-2");
  EXPECT_EQ(F[3].size(), 4u);
}

TEST(Parser, NegativeLeadingTerm) {
  const ContextPtr ctx = makeContext(RingKind::Integers, {"a", "b", "c", "d"});
  const Polynomial f = parsePolynomial("-b^2+d^2", ctx);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.terms()[0], (Term{RingElement(-1), M({0, 2, 0, 0})}));
  EXPECT_EQ(f.terms()[1], (Term{RingElement(1), M({0, 0, 0, 2})}));
}

TEST(Parser, SyntaxErrorPosition) {
  const ContextPtr ctx = makeContext(RingKind::Integers, {"a", "b"});
  try {
    parsePolynomial("a + + b", ctx);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(Parser, Errors) {
  EXPECT_EQ(parseFailure("vars: x\nvars: y\n").line(), 2u);
  EXPECT_EQ(parseFailure("vars: x\nx+q\n").line(), 2u);
  EXPECT_EQ(parseFailure("ring: integers\nvars: x\n1/2*x\n").line(), 3u);
  EXPECT_EQ(parseFailure("vars: x,x\n").line(), 1u);
  EXPECT_EQ(parseFailure("order: weird\nvars: x\n").line(), 1u);
  EXPECT_EQ(parseFailure("x+1\n").line(), 1u);
  EXPECT_EQ(parseFailure("vars: x\nx/0\n").line(), 2u);
}

TEST(Parser, WhitespaceAndComments) {
  const ProblemFile p = parseProblem("# header\n  ring : rationals \nvars: x , y\n\n 3/6 x y ^2  # tail\n");
  const ContextPtr ctx = makeContext(p.ring, p.variables, p.order);
  EXPECT_EQ(render(generators(p, ctx).at(0)), "1/2*x*y^2");
}

TEST(Parser, RoundTripRandom) {
  for (RingKind ring : {RingKind::Integers, RingKind::Rationals}) {
    for (OrderKind order : {OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex}) {
      const ContextPtr ctx = xyz(ring, order);
      std::mt19937_64 rng(41);
      for (int i = 0; i < 500; ++i) {
        const Polynomial f = randomPolynomial(rng, ctx, 5, 8, 1000);
        EXPECT_EQ(parsePolynomial(render(f), ctx), f) << render(f);
      }
    }
  }
}

TEST(Parser, RoundTripCorpus) {
  for (std::uint64_t i = 0; i < 250; ++i) {
    const RandomIdeal ideal = randomIdeal(i, RingKind::Integers);
    for (const Polynomial& f : ideal.generators) EXPECT_EQ(parsePolynomial(render(f), ideal.ctx), f);
  }
}

TEST(Parser, JuxtaposedVariables) {
  const ContextPtr ctx = makeContext(RingKind::Integers, {"x", "y", "xy2"});
  EXPECT_EQ(parsePolynomial("6xy^2", ctx), parsePolynomial("6*x*y^2", ctx));
  EXPECT_EQ(render(parsePolynomial("xy2", ctx)), "xy2");
  EXPECT_THROW(parsePolynomial("xq", ctx), ParseError);
}

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "eugb/polynomial.hpp"

namespace eugb {

/// Result of one reduction branch applied to h with partner k:
/// result == selfFactor * h + partnerMultiplier * k, selfFactor a unit.
struct ReductionOutcome {
  Polynomial result;
  bool changed = false;
  std::size_t additionsUsed = 0;
  RingElement selfFactor = 1;
  Term partnerMultiplier;
};

/// h - (LT(h)/LT(k)) * k. Requires LT(k) | LT(h).
ReductionOutcome topReduceStep(const Polynomial& h, const Polynomial& k);

/// a*h + b*(LM(h)/LM(k))*k where c = gcd(LC(h), LC(k)) = a*LC(h) + b*LC(k).
/// Requires LM(k) | LM(h), LC(k) not dividing LC(h), LC(h) not dividing LC(k),
/// and a unit.
ReductionOutcome bezoutCombine(const Polynomial& h, const Polynomial& k);

/// h + ((LC(h) mod LC(k) - LC(h)) / LC(k)) * (LM(h)/LM(k)) * k.
/// Requires LM(k) | LM(h) and LC(h) mod LC(k) != LC(h).
ReductionOutcome remainderAdjust(const Polynomial& h, const Polynomial& k);

bool canTopReduce(const Polynomial& h, const Polynomial& k);
bool canBezoutCombine(const Polynomial& h, const Polynomial& k);
bool canRemainderAdjust(const Polynomial& h, const Polynomial& k);

/// Sparse term combination sum_i multipliers[i] * generators[i]. Each
/// multiplier is a sum of terms, so this is the grouped form of a list of
/// (term, generator index) pairs.
struct Combination {
  std::map<std::size_t, Polynomial> multipliers;

  static Combination unit(std::size_t index, const ContextPtr& ctx);
  bool isZero() const { return multipliers.empty(); }
  /// this += factor * other
  void addScaled(const Combination& other, const Polynomial& factor);
  void addScaled(const Combination& other, const Term& factor);
  Combination scaled(const Term& factor) const;
  Combination scaled(const Polynomial& factor) const;
};

/// Evaluates a combination against its generators.
Polynomial expand(const Combination& c, std::span<const Polynomial> generators, const ContextPtr& ctx);

/// Certificates of an interreduction: `forward[i]` writes output i in terms of
/// the inputs, `reverse[j]` writes input j in terms of the outputs. Together
/// they witness equality of the generated ideals.
struct Certificate {
  std::vector<Combination> forward;
  std::vector<Combination> reverse;
};

struct InterreduceResult {
  std::vector<Polynomial> basis;
  Certificate certificate;  // empty when tracking is disabled
  std::size_t additions = 0;
  std::size_t reductionsToZero = 0;
};

/// Leading-term interreduction over a Euclidean ring. Zeros and duplicate
/// inputs are dropped. Output order follows input order.
InterreduceResult interreduce(std::span<const Polynomial> input, bool trackCertificates = true);

/// No LT divides another LT, and whenever LM(p) | LM(q) the residue of LC(q)
/// modulo LC(p) is LC(q) itself. Checked over all ordered pairs.
bool isInterreduced(std::span<const Polynomial> polys);

/// E - F with E, F the multiples of f, g whose leading term is
/// termLcm(LT(f), LT(g)).
Polynomial spoly(const Polynomial& f, const Polynomial& g);

/// Gcd-polynomial u*(x^g/LM(f))*f + v*(x^g/LM(g))*g with x^g the monomial lcm
/// and (c, u, v) = extGcd(LC(f), LC(g)). Its leading term is c*x^g.
Polynomial gpoly(const Polynomial& f, const Polynomial& g);

enum class ReductionMode {
  /// One reducer per step: subtract q * m * g with q the integer quotient of
  /// the coefficient by LC(g).
  Strong,
  /// Strong steps first; when no single reducer applies, reduce by the gcd
  /// combination of every basis element whose LM divides the term.
  Weak,
};

/// Full reduction of every term of f by G.
Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> G,
                      ReductionMode mode = ReductionMode::Weak, std::size_t* additions = nullptr);

/// Keeps each leading term and strongly reduces the tail against the set.
std::vector<Polynomial> tailReduce(std::span<const Polynomial> G);

}  // namespace eugb

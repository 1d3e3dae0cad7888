#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eugb/f4.hpp"
#include "eugb/polynomial.hpp"

namespace eugb {

/// Order in which the reference engine consumes candidate polynomials.
/// Fifo processes candidates in insertion order. Normal takes the candidate
/// with the smallest monomial lcm first (s before g, then insertion order).
enum class PairOrder { Fifo, Normal };

struct OracleConfig {
  bool useGPolys = true;
  PairOrder pairOrder = PairOrder::Normal;
  std::size_t maxIterations = 200'000;
};

struct BuchbergerResult {
  std::vector<Polynomial> basis;
  ComputationStats stats;
};

/// Reference completion: s-polynomials (and g-polynomials when enabled) of
/// every pair are reduced against the growing basis until nothing new
/// appears. With g-polynomials the reduction is strong and the result is a
/// strong Groebner basis; without them reduction is weak.
BuchbergerResult buchberger(std::span<const Polynomial> input, const OracleConfig& config = {});

enum class VerifyLevel {
  /// Every s-polynomial reduces to zero under weak reduction: G generates
  /// its ideal's leading ideal (Buchberger criterion over a PID).
  Spoly,
  /// s- and g-polynomials all reduce to zero under strong reduction: every
  /// leading term of the ideal is divisible by a single LT(g).
  Strong,
};

bool isGroebnerBasis(std::span<const Polynomial> G, VerifyLevel level = VerifyLevel::Spoly);

/// Mutual reduction to zero. Both sides must pass isGroebnerBasis at the
/// Spoly level, otherwise DomainError.
bool idealEquivalent(std::span<const Polynomial> A, std::span<const Polynomial> B);

/// Leading ideals agree: every LT on each side lies in the other's leading
/// ideal.
bool sameLeadingIdeal(std::span<const Polynomial> A, std::span<const Polynomial> B);

}  // namespace eugb

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eugb/polynomial.hpp"
#include "eugb/reduction.hpp"

namespace eugb {

/// A polynomial together with its derivation from the original generators.
struct BasisElement {
  Polynomial poly;
  Combination origin;  // empty when certificates are not tracked
};

using ElementPtr = std::shared_ptr<const BasisElement>;

/// Unordered critical pair. Owns immutable snapshots of both polynomials, so
/// a pair stays valid after the basis it came from has been replaced.
class CriticalPair {
 public:
  CriticalPair(ElementPtr a, ElementPtr b);

  const Polynomial& left() const { return left_->poly; }
  const Polynomial& right() const { return right_->poly; }
  const ElementPtr& leftElement() const { return left_; }
  const ElementPtr& rightElement() const { return right_; }
  const Term& lcmTerm() const { return lcm_; }
  std::uint64_t lcmDegree() const { return lcm_.monomial.degree(); }

  /// Same two polynomials.
  friend bool operator==(const CriticalPair& a, const CriticalPair& b);

 private:
  ElementPtr left_;
  ElementPtr right_;
  Term lcm_;
};

enum class SelectionStrategy { All, MinLcmDegree };

/// How new pairs are formed after a round.
enum class PairUpdate {
  /// Only (f, h) with f in the previous basis and h a new element.
  Minimal,
  /// Additionally pairs among the new elements of the same round.
  Closed,
};

struct ComputationStats {
  std::size_t polynomialAdditions = 0;
  std::size_t pairsProcessed = 0;
  std::size_t rounds = 0;
  std::size_t reductionsToZero = 0;
  std::size_t maxBasisSize = 0;

  friend bool operator==(const ComputationStats&, const ComputationStats&) = default;
};

/// One line of the round trace.
struct RoundTrace {
  std::size_t round = 0;
  std::size_t selected = 0;
  std::size_t hBefore = 0;  // |H| after construction, before interreduction
  std::size_t hAfter = 0;   // |interreduce(H u G)|
  std::vector<Term> newLeadingTerms;
  std::size_t cumulativeAdditions = 0;
  std::size_t pairsAdded = 0;
  /// Every previous leading term lies in the new leading ideal.
  bool leadingIdealMonotone = true;
};

std::string formatTrace(const RoundTrace& trace, const PolyContext& ctx);

/// What buildH puts in H for a pair. TermLcm: the two multiples with the
/// term lcm as leading term. WithGcd: additionally the gcd-polynomial when
/// neither leading coefficient divides the other.
enum class HConstruction { TermLcm, WithGcd };

struct F4Config {
  SelectionStrategy strategy = SelectionStrategy::MinLcmDegree;
  PairUpdate pairUpdate = PairUpdate::Closed;
  HConstruction hConstruction = HConstruction::WithGcd;
  bool criteria = false;
  std::size_t maxRounds = 10'000;
  bool trackCertificates = true;
  std::function<void(const RoundTrace&)> onRound;
};

struct F4Result {
  std::vector<Polynomial> basis;
  ComputationStats stats;
  /// certificate[i] writes basis[i] in terms of the input generators.
  std::vector<Combination> certificate;
  std::vector<RoundTrace> rounds;
};

/// Raised when the round guard trips. Carries the state reached so far.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::vector<Polynomial> partialBasis, ComputationStats stats)
      : std::runtime_error(what), partialBasis_(std::move(partialBasis)), stats_(stats) {}

  const std::vector<Polynomial>& partialBasis() const { return partialBasis_; }
  const ComputationStats& stats() const { return stats_; }

 private:
  std::vector<Polynomial> partialBasis_;
  ComputationStats stats_;
};

/// S(P). Throws DomainError on an empty pair set.
std::vector<CriticalPair> select(std::span<const CriticalPair> pairs, SelectionStrategy strategy);

/// Both multiples (lcm / LT(f)) * f and (lcm / LT(g)) * g of every selected
/// pair, duplicates collapsed, plus the gcd-polynomials under WithGcd.
std::vector<BasisElement> buildH(std::span<const CriticalPair> selected,
                                 HConstruction mode = HConstruction::TermLcm, std::size_t* additions = nullptr);

/// Membership of a term in the ideal generated by the leading terms of G:
/// the gcd of LC(g) over all g with LM(g) | mon(t) must divide coef(t).
bool leadingTermInIdeal(const Term& t, std::span<const Polynomial> G);

/// Pold plus (f, h) for f in G and every h in H whose leading term is outside
/// the leading ideal of G. Duplicates of pairs already in Pold are skipped.
std::vector<CriticalPair> updatePairs(std::vector<CriticalPair> pold, std::span<const ElementPtr> G,
                                      std::span<const ElementPtr> H, const F4Config& config);

/// Removes pairs that provably reduce to zero: the product criterion when
/// both leading monomials and leading coefficients are coprime, and the
/// chain criterion when a third element's leading term divides the pair's
/// lcm term and both connecting pairs are still pending.
std::vector<CriticalPair> applyCriteria(std::vector<CriticalPair> pairs, const F4Config& config);

F4Result f4(std::span<const Polynomial> input, const F4Config& config = {});

}  // namespace eugb

#include "eugb/buchberger.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "eugb/errors.hpp"
#include "eugb/reduction.hpp"

namespace eugb {

namespace {

struct Candidate {
  std::size_t i;
  std::size_t j;
  bool isGPoly;
};

}  // namespace

BuchbergerResult buchberger(std::span<const Polynomial> input, const OracleConfig& config) {
  BuchbergerResult result;
  ComputationStats& stats = result.stats;
  std::vector<Polynomial>& G = result.basis;
  const ReductionMode mode = config.useGPolys ? ReductionMode::Strong : ReductionMode::Weak;

  std::deque<Candidate> queue;
  auto adjoin = [&](Polynomial r) {
    const Ring& ring = r.ring();
    G.push_back(std::move(r));
    const std::size_t n = G.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
      queue.push_back({i, n, false});
      // A g-polynomial of two elements whose leading coefficients divide one
      // another is a multiple of one of them.
      const bool divisible = ring.divides(G[i].lc(), G[n].lc()) || ring.divides(G[n].lc(), G[i].lc());
      if (config.useGPolys && !divisible) queue.push_back({i, n, true});
    }
    stats.maxBasisSize = std::max(stats.maxBasisSize, G.size());
  };
  for (const Polynomial& f : input) {
    if (!f.isZero() && std::find(G.begin(), G.end(), f) == G.end()) adjoin(f);
  }
  if (G.empty()) throw DomainError("buchberger: input is empty or all zero");

  std::size_t iterations = 0;
  while (!queue.empty()) {
    if (++iterations > config.maxIterations) {
      throw GuardExceeded("buchberger: exceeded " + std::to_string(config.maxIterations) + " iterations", G, stats);
    }
    auto pick = queue.begin();
    if (config.pairOrder == PairOrder::Normal) {
      pick = std::min_element(queue.begin(), queue.end(), [&](const Candidate& a, const Candidate& b) {
        const auto c = compareMonomials(monomialLcm(G[a.i].lm(), G[a.j].lm()),
                                        monomialLcm(G[b.i].lm(), G[b.j].lm()), G[a.i].order());
        if (c != 0) return c < 0;
        return !a.isGPoly && b.isGPoly;
      });
    }
    const Candidate c = *pick;
    queue.erase(pick);
    ++stats.rounds;
    if (!c.isGPoly) ++stats.pairsProcessed;
    const Polynomial p = c.isGPoly ? gpoly(G[c.i], G[c.j]) : spoly(G[c.i], G[c.j]);
    ++stats.polynomialAdditions;
    Polynomial r = normalForm(p, G, mode, &stats.polynomialAdditions);
    if (r.isZero()) {
      ++stats.reductionsToZero;
      continue;
    }
    adjoin(std::move(r));
  }
  return result;
}

bool isGroebnerBasis(std::span<const Polynomial> G, VerifyLevel level) {
  for (const Polynomial& g : G) {
    if (g.isZero()) throw DomainError("isGroebnerBasis: zero polynomial in set");
  }
  const ReductionMode mode = level == VerifyLevel::Strong ? ReductionMode::Strong : ReductionMode::Weak;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (!normalForm(spoly(G[i], G[j]), G, mode).isZero()) return false;
      if (level == VerifyLevel::Strong && !normalForm(gpoly(G[i], G[j]), G, mode).isZero()) return false;
    }
  }
  return true;
}

bool idealEquivalent(std::span<const Polynomial> A, std::span<const Polynomial> B) {
  if (!isGroebnerBasis(A) || !isGroebnerBasis(B)) {
    throw DomainError("idealEquivalent: both sides must be Groebner bases");
  }
  for (const Polynomial& b : B) {
    if (!normalForm(b, A).isZero()) return false;
  }
  for (const Polynomial& a : A) {
    if (!normalForm(a, B).isZero()) return false;
  }
  return true;
}

bool sameLeadingIdeal(std::span<const Polynomial> A, std::span<const Polynomial> B) {
  auto covered = [](std::span<const Polynomial> from, std::span<const Polynomial> into) {
    return std::all_of(from.begin(), from.end(),
                       [&](const Polynomial& p) { return leadingTermInIdeal(p.lt(), into); });
  };
  return covered(A, B) && covered(B, A);
}

}  // namespace eugb

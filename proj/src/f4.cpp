#include "eugb/f4.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "eugb/errors.hpp"

namespace eugb {
namespace {

// Canonical pair order: smaller LM first, then smaller norm(LC), then the
// polynomial order.
bool elementBefore(const Polynomial& a, const Polynomial& b) {
  if (auto c = compareMonomials(a.lm(), b.lm(), a.order()); c != 0) return c < 0;
  const Ring& ring = a.ring();
  if (auto na = ring.norm(a.lc()), nb = ring.norm(b.lc()); na != nb) return na < nb;
  return comparePolynomials(a, b) < 0;
}

std::vector<Polynomial> polysOf(std::span<const ElementPtr> elems) {
  std::vector<Polynomial> out;
  out.reserve(elems.size());
  for (const ElementPtr& e : elems) out.push_back(e->poly);
  return out;
}

bool containsPair(std::span<const CriticalPair> pairs, const CriticalPair& p) {
  return std::find(pairs.begin(), pairs.end(), p) != pairs.end();
}

}  // namespace

CriticalPair::CriticalPair(ElementPtr a, ElementPtr b) {
  if (!a || !b || a->poly.isZero() || b->poly.isZero()) throw DomainError("critical pair with a zero member");
  requireSameContext(a->poly.context(), b->poly.context());
  if (a->poly == b->poly) throw DomainError("critical pair of a polynomial with itself");
  if (elementBefore(b->poly, a->poly)) std::swap(a, b);
  left_ = std::move(a);
  right_ = std::move(b);
  lcm_ = termLcm(left_->poly.ring(), left_->poly.lt(), right_->poly.lt());
}

bool operator==(const CriticalPair& a, const CriticalPair& b) {
  if (a.left_ == b.left_ && a.right_ == b.right_) return true;
  return a.left() == b.left() && a.right() == b.right();
}

std::string formatTrace(const RoundTrace& t, const PolyContext& ctx) {
  std::ostringstream os;
  os << "round=" << t.round << " selected=" << t.selected << " h_before=" << t.hBefore
     << " h_after=" << t.hAfter << " new_lt=[";
  for (std::size_t i = 0; i < t.newLeadingTerms.size(); ++i) {
    if (i > 0) os << ',';
    os << renderTerm(t.newLeadingTerms[i], ctx);
  }
  os << "] pairs_added=" << t.pairsAdded << " additions=" << t.cumulativeAdditions;
  return os.str();
}

std::vector<CriticalPair> select(std::span<const CriticalPair> pairs, SelectionStrategy strategy) {
  if (pairs.empty()) throw DomainError("select: empty pair set");
  if (strategy == SelectionStrategy::All) return {pairs.begin(), pairs.end()};
  std::uint64_t minDegree = pairs.front().lcmDegree();
  for (const CriticalPair& p : pairs) minDegree = std::min(minDegree, p.lcmDegree());
  std::vector<CriticalPair> out;
  for (const CriticalPair& p : pairs) {
    if (p.lcmDegree() == minDegree) out.push_back(p);
  }
  return out;
}

std::vector<BasisElement> buildH(std::span<const CriticalPair> selected, HConstruction mode,
                                 std::size_t* additions) {
  std::vector<BasisElement> H;
  auto push = [&H](Polynomial p, Combination origin) {
    for (const BasisElement& x : H) {
      if (x.poly == p) return;
    }
    H.push_back({std::move(p), std::move(origin)});
  };
  auto multiple = [&push](const ElementPtr& e, const Term& lcm) {
    const Term m = termQuotient(e->poly.ring(), lcm, e->poly.lt());
    push(scaleByTerm(e->poly, m), e->origin.scaled(m));
  };
  for (const CriticalPair& pair : selected) {
    multiple(pair.leftElement(), pair.lcmTerm());
    multiple(pair.rightElement(), pair.lcmTerm());
  }
  if (mode == HConstruction::WithGcd) {
    for (const CriticalPair& pair : selected) {
      const Polynomial& f = pair.left();
      const Polynomial& g = pair.right();
      const Ring& ring = f.ring();
      if (ring.divides(f.lc(), g.lc()) || ring.divides(g.lc(), f.lc())) continue;
      const ExtGcd e = ring.extGcd(f.lc(), g.lc());
      const Monomial& lcm = pair.lcmTerm().monomial;
      const Term mf{e.u, monomialQuotient(lcm, f.lm())};
      const Term mg{e.v, monomialQuotient(lcm, g.lm())};
      Combination origin = pair.leftElement()->origin.scaled(mf);
      origin.addScaled(pair.rightElement()->origin, mg);
      push(gpoly(f, g), std::move(origin));
      if (additions != nullptr) ++*additions;
    }
  }
  return H;
}

bool leadingTermInIdeal(const Term& t, std::span<const Polynomial> G) {
  if (t.coefficient.isZero()) throw DomainError("leadingTermInIdeal: zero term");
  std::optional<RingElement> d;
  for (const Polynomial& g : G) {
    if (g.isZero()) throw DomainError("leadingTermInIdeal: zero polynomial in basis");
    if (!monomialDivides(g.lm(), t.monomial)) continue;
    d = d ? g.ring().gcd(*d, g.lc()) : g.lc();
  }
  if (!d) return false;
  return G.front().ring().divides(*d, t.coefficient);
}

std::vector<CriticalPair> updatePairs(std::vector<CriticalPair> pold, std::span<const ElementPtr> G,
                                      std::span<const ElementPtr> H, const F4Config& config) {
  const std::vector<Polynomial> gPolys = polysOf(G);
  std::vector<ElementPtr> fresh;
  for (const ElementPtr& h : H) {
    if (G.empty() || !leadingTermInIdeal(h->poly.lt(), gPolys)) fresh.push_back(h);
  }
  auto add = [&pold](const ElementPtr& a, const ElementPtr& b) {
    if (a->poly == b->poly) return;
    CriticalPair p(a, b);
    if (!containsPair(pold, p)) pold.push_back(std::move(p));
  };
  for (const ElementPtr& f : G) {
    for (const ElementPtr& h : fresh) add(f, h);
  }
  if (config.pairUpdate == PairUpdate::Closed) {
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      for (std::size_t j = i + 1; j < fresh.size(); ++j) add(fresh[i], fresh[j]);
    }
  }
  if (config.criteria) return applyCriteria(std::move(pold), config);
  return pold;
}

std::vector<CriticalPair> applyCriteria(std::vector<CriticalPair> pairs, const F4Config& config) {
  if (!config.criteria || pairs.empty()) return pairs;
  const Ring& ring = pairs.front().left().ring();

  // Product criterion, ring-safe form.
  std::erase_if(pairs, [&ring](const CriticalPair& p) {
    return monomialsCoprime(p.left().lm(), p.right().lm()) &&
           ring.isUnit(ring.gcd(p.left().lc(), p.right().lc()));
  });

  // Chain criterion over the remaining pending pairs. Members are identified
  // by value.
  std::vector<const Polynomial*> members;
  auto idOf = [&members](const Polynomial& p) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (*members[i] == p) return i;
    }
    members.push_back(&p);
    return members.size() - 1;
  };
  std::vector<std::pair<std::size_t, std::size_t>> ids;
  std::set<std::pair<std::size_t, std::size_t>> present;
  for (const CriticalPair& p : pairs) {
    auto a = idOf(p.left());
    auto b = idOf(p.right());
    ids.emplace_back(a, b);
    present.emplace(std::min(a, b), std::max(a, b));
  }
  auto has = [&present](std::size_t a, std::size_t b) {
    return present.contains({std::min(a, b), std::max(a, b)});
  };
  std::vector<bool> drop(pairs.size(), false);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = ids[i];
    const Term& lcm = pairs[i].lcmTerm();
    for (std::size_t h = 0; h < members.size(); ++h) {
      if (h == a || h == b || !has(a, h) || !has(h, b)) continue;
      const Polynomial& hp = *members[h];
      if (!termDivides(ring, hp.lt(), lcm)) continue;
      if (monomialLcm(members[a]->lm(), hp.lm()) == lcm.monomial) continue;
      if (monomialLcm(members[b]->lm(), hp.lm()) == lcm.monomial) continue;
      drop[i] = true;
      break;
    }
  }
  std::vector<CriticalPair> kept;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!drop[i]) kept.push_back(std::move(pairs[i]));
  }
  return kept;
}

F4Result f4(std::span<const Polynomial> input, const F4Config& config) {
  if (std::all_of(input.begin(), input.end(), [](const Polynomial& p) { return p.isZero(); })) {
    throw DomainError("f4: input is empty or all zero");
  }
  const ContextPtr ctx = input.front().context();
  const bool track = config.trackCertificates;

  F4Result result;
  ComputationStats& stats = result.stats;

  std::vector<ElementPtr> G;
  {
    InterreduceResult ir = interreduce(input, track);
    stats.polynomialAdditions += ir.additions;
    stats.reductionsToZero += ir.reductionsToZero;
    for (std::size_t i = 0; i < ir.basis.size(); ++i) {
      Combination origin = track ? std::move(ir.certificate.forward[i]) : Combination{};
      G.push_back(std::make_shared<const BasisElement>(BasisElement{std::move(ir.basis[i]), std::move(origin)}));
    }
  }
  stats.maxBasisSize = G.size();

  std::vector<CriticalPair> P;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) P.emplace_back(G[i], G[j]);
  }
  P = applyCriteria(std::move(P), config);

  while (!P.empty()) {
    if (stats.rounds >= config.maxRounds) {
      throw GuardExceeded("f4: exceeded " + std::to_string(config.maxRounds) + " rounds", polysOf(G), stats);
    }
    ++stats.rounds;
    RoundTrace trace;
    trace.round = stats.rounds;

    const std::vector<CriticalPair> selected = select(P, config.strategy);
    std::vector<BasisElement> H = buildH(selected, config.hConstruction, &stats.polynomialAdditions);
    std::erase_if(P, [&selected](const CriticalPair& p) { return containsPair(selected, p); });
    stats.pairsProcessed += selected.size();
    trace.selected = selected.size();
    trace.hBefore = H.size();

    // H u G, with G first so that existing elements win reducer ties.
    std::vector<Polynomial> work;
    std::vector<const Combination*> origins;
    for (const ElementPtr& g : G) {
      work.push_back(g->poly);
      origins.push_back(&g->origin);
    }
    for (const BasisElement& h : H) {
      work.push_back(h.poly);
      origins.push_back(&h.origin);
    }
    InterreduceResult ir = interreduce(work, track);
    stats.polynomialAdditions += ir.additions;
    stats.reductionsToZero += ir.reductionsToZero;

    std::vector<ElementPtr> next;
    for (std::size_t i = 0; i < ir.basis.size(); ++i) {
      auto same = std::find_if(G.begin(), G.end(), [&](const ElementPtr& g) { return g->poly == ir.basis[i]; });
      if (same != G.end()) {
        next.push_back(*same);
        continue;
      }
      Combination origin;
      if (track) {
        for (const auto& [j, mult] : ir.certificate.forward[i].multipliers) origin.addScaled(*origins[j], mult);
      }
      next.push_back(std::make_shared<const BasisElement>(BasisElement{std::move(ir.basis[i]), std::move(origin)}));
    }
    trace.hAfter = next.size();

    const std::vector<Polynomial> oldPolys = polysOf(G);
    const std::vector<Polynomial> newPolys = polysOf(next);
    for (const Polynomial& g : oldPolys) {
      if (!leadingTermInIdeal(g.lt(), newPolys)) trace.leadingIdealMonotone = false;
    }
    if (!trace.leadingIdealMonotone) throw InvariantViolation("f4: leading ideal shrank during a round");
    for (const Polynomial& h : newPolys) {
      if (!leadingTermInIdeal(h.lt(), oldPolys)) trace.newLeadingTerms.push_back(h.lt());
    }

    const std::size_t before = P.size();
    P = updatePairs(std::move(P), G, next, config);
    trace.pairsAdded = P.size() >= before ? P.size() - before : 0;
    G = std::move(next);
    stats.maxBasisSize = std::max(stats.maxBasisSize, G.size());
    trace.cumulativeAdditions = stats.polynomialAdditions;
    if (config.onRound) config.onRound(trace);
    result.rounds.push_back(std::move(trace));
  }

  std::sort(G.begin(), G.end(), [](const ElementPtr& a, const ElementPtr& b) { return elementBefore(a->poly, b->poly); });
  for (const ElementPtr& g : G) {
    result.basis.push_back(g->poly);
    if (track) result.certificate.push_back(g->origin);
  }
  return result;
}

}  // namespace eugb

#include "eugb/reduction.hpp"

#include <algorithm>
#include <optional>

#include "eugb/errors.hpp"

namespace eugb {
namespace {

ReductionOutcome makeOutcome(const Polynomial& h, const RingElement& a, Term t, const Polynomial& k) {
  Polynomial result = combine(a, h, t, k);
  return {std::move(result), true, 1, a, std::move(t)};
}

}  // namespace

bool canTopReduce(const Polynomial& h, const Polynomial& k) {
  if (h.isZero() || k.isZero()) return false;
  return termDivides(h.ring(), k.lt(), h.lt());
}

bool canBezoutCombine(const Polynomial& h, const Polynomial& k) {
  if (h.isZero() || k.isZero()) return false;
  const Ring& ring = h.ring();
  if (!monomialDivides(k.lm(), h.lm())) return false;
  if (ring.divides(k.lc(), h.lc())) return false;
  // The gcd must be a proper divisor of LC(h); otherwise the step is a no-op.
  if (ring.divides(h.lc(), k.lc())) return false;
  return ring.isUnit(ring.extGcd(h.lc(), k.lc()).u);
}

bool canRemainderAdjust(const Polynomial& h, const Polynomial& k) {
  if (h.isZero() || k.isZero()) return false;
  if (!monomialDivides(k.lm(), h.lm())) return false;
  return h.ring().mod(h.lc(), k.lc()) != h.lc();
}

ReductionOutcome topReduceStep(const Polynomial& h, const Polynomial& k) {
  if (!canTopReduce(h, k)) throw DomainError("topReduceStep: LT(k) does not divide LT(h)");
  requireSameContext(h.context(), k.context());
  Term q = termQuotient(h.ring(), h.lt(), k.lt());
  q.coefficient = -q.coefficient;
  return makeOutcome(h, RingElement(1), std::move(q), k);
}

ReductionOutcome bezoutCombine(const Polynomial& h, const Polynomial& k) {
  if (!canBezoutCombine(h, k)) throw DomainError("bezoutCombine: precondition violated");
  requireSameContext(h.context(), k.context());
  const ExtGcd g = h.ring().extGcd(h.lc(), k.lc());
  ReductionOutcome out = makeOutcome(h, g.u, Term{g.v, monomialQuotient(h.lm(), k.lm())}, k);
  if (!out.result.isZero() && out.result.lm() == h.lm() && out.result.lc() != g.gcd) {
    throw InvariantViolation("bezoutCombine: leading coefficient is not the gcd");
  }
  return out;
}

ReductionOutcome remainderAdjust(const Polynomial& h, const Polynomial& k) {
  if (!canRemainderAdjust(h, k)) throw DomainError("remainderAdjust: precondition violated");
  requireSameContext(h.context(), k.context());
  const Ring& ring = h.ring();
  const RingElement r = ring.mod(h.lc(), k.lc());
  const RingElement delta = r - h.lc();
  if (!ring.divides(k.lc(), delta)) throw InvariantViolation("remainderAdjust: inexact multiplier");
  Term t{ring.exactQuotient(delta, k.lc()), monomialQuotient(h.lm(), k.lm())};
  ReductionOutcome out = makeOutcome(h, RingElement(1), std::move(t), k);
  if (!r.isZero() && (out.result.isZero() || out.result.lm() != h.lm() || out.result.lc() != r)) {
    throw InvariantViolation("remainderAdjust: unexpected leading term");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Combinations

Combination Combination::unit(std::size_t index, const ContextPtr& ctx) {
  Combination c;
  c.multipliers.emplace(index, Polynomial::constant(ctx, RingElement(1)));
  return c;
}

void Combination::addScaled(const Combination& other, const Polynomial& factor) {
  if (factor.isZero()) return;
  for (const auto& [index, mult] : other.multipliers) {
    Polynomial term = mult * factor;
    auto it = multipliers.find(index);
    if (it == multipliers.end()) {
      if (!term.isZero()) multipliers.emplace(index, std::move(term));
    } else {
      it->second = it->second + term;
      if (it->second.isZero()) multipliers.erase(it);
    }
  }
}

void Combination::addScaled(const Combination& other, const Term& factor) {
  if (factor.coefficient.isZero()) return;
  for (const auto& [index, mult] : other.multipliers) {
    auto it = multipliers.find(index);
    if (it == multipliers.end()) {
      multipliers.emplace(index, scaleByTerm(mult, factor));
    } else {
      it->second = combine(RingElement(1), it->second, factor, mult);
      if (it->second.isZero()) multipliers.erase(it);
    }
  }
}

Combination Combination::scaled(const Term& factor) const {
  Combination out;
  out.addScaled(*this, factor);
  return out;
}

Combination Combination::scaled(const Polynomial& factor) const {
  Combination out;
  out.addScaled(*this, factor);
  return out;
}

Polynomial expand(const Combination& c, std::span<const Polynomial> generators, const ContextPtr& ctx) {
  Polynomial sum(ctx);
  for (const auto& [index, mult] : c.multipliers) {
    if (index >= generators.size()) throw DomainError("certificate references a missing generator");
    sum = sum + mult * generators[index];
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Interreduce

namespace {

struct Slot {
  Polynomial poly;
  std::size_t id;
  bool alive = true;
};

class Interreducer {
 public:
  Interreducer(std::span<const Polynomial> input, bool track) : track_(track) {
    if (!input.empty()) ctx_ = input.front().context();
    if (track_) reverse_.resize(input.size());
    for (std::size_t j = 0; j < input.size(); ++j) {
      const Polynomial& p = input[j];
      if (p.isZero()) continue;
      auto dup = std::find_if(slots_.begin(), slots_.end(), [&](const Slot& s) { return s.poly == p; });
      if (dup != slots_.end()) {
        if (track_) reverse_[j] = Combination::unit(dup->id, ctx_);
        continue;
      }
      const std::size_t id = slots_.size();
      slots_.push_back({p, id});
      if (track_) {
        forward_.push_back(Combination::unit(j, ctx_));
        reverse_[j] = Combination::unit(id, ctx_);
      }
    }
  }

  InterreduceResult run() {
    while (step()) {
    }
    return finish();
  }

 private:
  // Finds and applies one reduction. Returns false at the fixpoint.
  bool step() {
    std::vector<std::size_t> order;
    for (const Slot& s : slots_) {
      if (s.alive) order.push_back(s.id);
    }
    const Ring& ring = ctx_->ring;
    const OrderKind ord = ctx_->order;
    // h scan order: ascending LM, then norm(LC), then insertion.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const Polynomial& pa = slots_[a].poly;
      const Polynomial& pb = slots_[b].poly;
      if (auto c = compareMonomials(pa.lm(), pb.lm(), ord); c != 0) return c < 0;
      return ring.norm(pa.lc()) < ring.norm(pb.lc());
    });
    // Reducer preference: descending LM, then ascending norm(LC), then insertion.
    auto reducerBefore = [&](std::size_t a, std::size_t b) {
      const Polynomial& pa = slots_[a].poly;
      const Polynomial& pb = slots_[b].poly;
      if (auto c = compareMonomials(pa.lm(), pb.lm(), ord); c != 0) return c > 0;
      return ring.norm(pa.lc()) < ring.norm(pb.lc());
    };

    std::vector<std::size_t> reducers;
    for (std::size_t h : order) {
      const Polynomial& hp = slots_[h].poly;
      reducers.clear();
      for (std::size_t k : order) {
        if (k != h && monomialDivides(slots_[k].poly.lm(), hp.lm())) reducers.push_back(k);
      }
      std::stable_sort(reducers.begin(), reducers.end(), reducerBefore);
      for (std::size_t k : reducers) {
        const Polynomial& kp = slots_[k].poly;
        if (canTopReduce(hp, kp)) return apply(h, k, topReduceStep(hp, kp));
        if (canBezoutCombine(hp, kp)) return apply(h, k, bezoutCombine(hp, kp));
        if (canRemainderAdjust(hp, kp)) return apply(h, k, remainderAdjust(hp, kp));
      }
    }
    return false;
  }

  bool apply(std::size_t h, std::size_t k, ReductionOutcome out) {
    checkProgress(slots_[h].poly, out.result);
    additions_ += out.additionsUsed;
    record(h, k, out.selfFactor, out.partnerMultiplier, out.result.isZero());
    if (out.result.isZero()) {
      slots_[h].alive = false;
      ++reductionsToZero_;
    } else {
      slots_[h].poly = std::move(out.result);
      for (const Slot& s : slots_) {
        if (s.alive) reduceTail(s.id);
      }
    }
    return true;
  }

  // Strong reduction of the non-leading terms of h by the other live slots.
  // Leading terms are untouched, so the fixpoint argument is unaffected; this
  // only keeps tail coefficients from growing without bound.
  void reduceTail(std::size_t h) {
    const Ring& ring = ctx_->ring;
    const OrderKind ord = ctx_->order;
    std::size_t pos = 1;
    while (pos < slots_[h].poly.size()) {
      const Term t = slots_[h].poly.terms()[pos];
      std::size_t best = slots_.size();
      RingElement bestQ;
      for (const Slot& s : slots_) {
        if (!s.alive || s.id == h || !monomialDivides(s.poly.lm(), t.monomial)) continue;
        RingElement q = ring.divrem(t.coefficient, s.poly.lc()).quotient;
        if (q.isZero()) continue;
        bool better = best == slots_.size();
        if (!better) {
          const Polynomial& b = slots_[best].poly;
          const auto c = compareMonomials(s.poly.lm(), b.lm(), ord);
          better = c > 0 || (c == 0 && ring.norm(s.poly.lc()) < ring.norm(b.lc()));
        }
        if (better) {
          best = s.id;
          bestQ = std::move(q);
        }
      }
      if (best == slots_.size()) {
        ++pos;
        continue;
      }
      Term m{-bestQ, monomialQuotient(t.monomial, slots_[best].poly.lm())};
      slots_[h].poly = combine(RingElement(1), slots_[h].poly, m, slots_[best].poly);
      ++additions_;
      record(h, best, RingElement(1), m, false);
    }
  }

  // Certificate bookkeeping for h := a*h + T*k.
  void record(std::size_t h, std::size_t k, const RingElement& a, const Term& T, bool vanished) {
    if (!track_) return;
    const Ring& ring = ctx_->ring;
    const Term one{RingElement(1), Monomial(ctx_->arity())};
    if (a == RingElement(1)) {
      forward_[h].addScaled(forward_[k], T);
    } else {
      Combination next = forward_[h].scaled(Term{a, one.monomial});
      next.addScaled(forward_[k], T);
      forward_[h] = std::move(next);
    }
    // old_h = a^{-1} * (new_h - T * k)
    const RingElement inv = ring.inverse(a);
    const Term back{-(inv * T.coefficient), T.monomial};
    for (Combination& rev : reverse_) {
      auto it = rev.multipliers.find(h);
      if (it == rev.multipliers.end()) continue;
      Polynomial p = std::move(it->second);
      rev.multipliers.erase(it);
      if (!vanished) rev.multipliers.emplace(h, inv == RingElement(1) ? p : scale(p, inv));
      auto at = rev.multipliers.find(k);
      if (at == rev.multipliers.end()) {
        rev.multipliers.emplace(k, scaleByTerm(p, back));
      } else {
        at->second = combine(RingElement(1), at->second, back, p);
        if (at->second.isZero()) rev.multipliers.erase(at);
      }
    }
  }

  // Each step must lower LM(h), or keep it and move LC(h) down in the
  // (sign, norm) measure: negative coefficients may turn non-negative once,
  // after which the norm strictly decreases.
  void checkProgress(const Polynomial& before, const Polynomial& after) const {
    if (after.isZero()) return;
    const auto c = compareMonomials(after.lm(), before.lm(), ctx_->order);
    if (c < 0) return;
    if (c > 0) throw InvariantViolation("interreduce: leading monomial increased");
    const Ring& ring = ctx_->ring;
    if (ring.isField()) throw InvariantViolation("interreduce: field step kept the leading monomial");
    const RingElement& b = before.lc();
    const RingElement& a = after.lc();
    if (b.sign() < 0 && a.sign() > 0) return;
    if (b.sign() > 0 && a.sign() > 0 && ring.norm(a) < ring.norm(b)) return;
    throw InvariantViolation("interreduce: no progress on leading coefficient");
  }

  InterreduceResult finish() {
    InterreduceResult result;
    result.additions = additions_;
    result.reductionsToZero = reductionsToZero_;
    std::vector<std::size_t> outIndex(slots_.size(), 0);
    for (const Slot& s : slots_) {
      if (!s.alive) continue;
      outIndex[s.id] = result.basis.size();
      result.basis.push_back(s.poly);
      if (track_) result.certificate.forward.push_back(std::move(forward_[s.id]));
    }
    if (track_) {
      for (Combination& rev : reverse_) {
        Combination mapped;
        for (auto& [id, mult] : rev.multipliers) {
          if (!slots_[id].alive) throw InvariantViolation("interreduce: reverse certificate uses a removed slot");
          mapped.multipliers.emplace(outIndex[id], std::move(mult));
        }
        result.certificate.reverse.push_back(std::move(mapped));
      }
    }
    return result;
  }

  bool track_;
  ContextPtr ctx_;
  std::vector<Slot> slots_;
  std::vector<Combination> forward_;
  std::vector<Combination> reverse_;
  std::size_t additions_ = 0;
  std::size_t reductionsToZero_ = 0;
};

}  // namespace

InterreduceResult interreduce(std::span<const Polynomial> input, bool trackCertificates) {
  for (std::size_t i = 1; i < input.size(); ++i) requireSameContext(input[0].context(), input[i].context());
  return Interreducer(input, trackCertificates).run();
}

bool isInterreduced(std::span<const Polynomial> polys) {
  for (const Polynomial& p : polys) {
    if (p.isZero()) throw DomainError("isInterreduced: zero polynomial in set");
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (i == j) continue;
      const Polynomial& p = polys[i];
      const Polynomial& q = polys[j];
      const Ring& ring = p.ring();
      if (termDivides(ring, p.lt(), q.lt())) return false;
      if (monomialDivides(p.lm(), q.lm()) && ring.mod(q.lc(), p.lc()) != q.lc()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// s-polynomials and normal forms

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  if (f.isZero() || g.isZero()) throw DomainError("spoly of a zero polynomial");
  requireSameContext(f.context(), g.context());
  const Ring& ring = f.ring();
  const Term lcm = termLcm(ring, f.lt(), g.lt());
  Term mf = termQuotient(ring, lcm, f.lt());
  Term mg = termQuotient(ring, lcm, g.lt());
  mg.coefficient = -mg.coefficient;
  return combine(RingElement(1), scaleByTerm(f, mf), mg, g);
}

Polynomial gpoly(const Polynomial& f, const Polynomial& g) {
  if (f.isZero() || g.isZero()) throw DomainError("gpoly of a zero polynomial");
  requireSameContext(f.context(), g.context());
  const ExtGcd e = f.ring().extGcd(f.lc(), g.lc());
  const Monomial lcm = monomialLcm(f.lm(), g.lm());
  const Polynomial left = scaleByTerm(f, Term{e.u, monomialQuotient(lcm, f.lm())});
  return combine(RingElement(1), left, Term{e.v, monomialQuotient(lcm, g.lm())}, g);
}

namespace {

struct Reducer {
  const Polynomial* poly;
  std::size_t index;
};

}  // namespace

Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> G, ReductionMode mode,
                      std::size_t* additions) {
  for (const Polynomial& g : G) {
    if (g.isZero()) throw DomainError("normalForm: zero polynomial in basis");
    requireSameContext(f.context(), g.context());
  }
  const Ring& ring = f.ring();
  const OrderKind ord = f.order();
  Polynomial r = f;
  std::size_t pos = 0;
  std::size_t used = 0;
  std::vector<Reducer> eligible;
  while (pos < r.size()) {
    const Term t = r.terms()[pos];
    eligible.clear();
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (monomialDivides(G[i].lm(), t.monomial)) eligible.push_back({&G[i], i});
    }
    if (eligible.empty()) {
      ++pos;
      continue;
    }

    // Single reducer: largest LM, then smallest norm(LC), then index.
    const Reducer* best = nullptr;
    RingElement bestQ;
    for (const Reducer& e : eligible) {
      RingElement q = ring.divrem(t.coefficient, e.poly->lc()).quotient;
      if (q.isZero()) continue;
      bool better = best == nullptr;
      if (!better) {
        const auto c = compareMonomials(e.poly->lm(), best->poly->lm(), ord);
        better = c > 0 || (c == 0 && ring.norm(e.poly->lc()) < ring.norm(best->poly->lc()));
      }
      if (better) {
        best = &e;
        bestQ = std::move(q);
      }
    }
    if (best != nullptr) {
      Term m{-bestQ, monomialQuotient(t.monomial, best->poly->lm())};
      r = combine(RingElement(1), r, m, *best->poly);
      ++used;
      continue;
    }
    if (mode == ReductionMode::Strong || eligible.size() < 2) {
      ++pos;
      continue;
    }

    // Weak step: d = gcd of the eligible leading coefficients = sum u_i LC(g_i).
    RingElement d = eligible[0].poly->lc();
    std::vector<RingElement> u(eligible.size(), RingElement(0));
    u[0] = 1;
    for (std::size_t i = 1; i < eligible.size(); ++i) {
      const ExtGcd e = ring.extGcd(d, eligible[i].poly->lc());
      for (std::size_t j = 0; j < i; ++j) u[j] *= e.u;
      u[i] = e.v;
      d = e.gcd;
    }
    const RingElement q = ring.divrem(t.coefficient, d).quotient;
    if (q.isZero()) {
      ++pos;
      continue;
    }
    for (std::size_t i = 0; i < eligible.size(); ++i) {
      if (u[i].isZero()) continue;
      Term m{-(q * u[i]), monomialQuotient(t.monomial, eligible[i].poly->lm())};
      r = combine(RingElement(1), r, m, *eligible[i].poly);
      ++used;
    }
  }
  if (additions != nullptr) *additions += used;
  return r;
}

std::vector<Polynomial> tailReduce(std::span<const Polynomial> G) {
  std::vector<Polynomial> out;
  out.reserve(G.size());
  for (const Polynomial& g : G) {
    if (g.isZero()) continue;
    Polynomial lead = Polynomial::monomial(g.context(), g.lt());
    out.push_back(lead + normalForm(g.tail(), G, ReductionMode::Strong));
  }
  return out;
}

}  // namespace eugb

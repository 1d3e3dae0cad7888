#include "eugb/polynomial.hpp"

#include <algorithm>
#include <optional>

#include "eugb/errors.hpp"

namespace eugb {

ContextPtr makeContext(RingKind ring, std::vector<std::string> variables, OrderKind order) {
  return std::make_shared<const PolyContext>(PolyContext{Ring(ring), std::move(variables), order});
}

void requireSameContext(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw DomainError("polynomials from different contexts");
}

bool termDivides(const Ring& ring, const Term& s, const Term& t) {
  return monomialDivides(s.monomial, t.monomial) && ring.divides(s.coefficient, t.coefficient);
}

Term termQuotient(const Ring& ring, const Term& t, const Term& s) {
  if (!termDivides(ring, s, t)) throw DomainError("term quotient of non-divisible pair");
  return {ring.exactQuotient(t.coefficient, s.coefficient), monomialQuotient(t.monomial, s.monomial)};
}

Term termLcm(const Ring& ring, const Term& s, const Term& t) {
  return {ring.lcm(s.coefficient, t.coefficient), monomialLcm(s.monomial, t.monomial)};
}

Polynomial Polynomial::fromTerms(ContextPtr ctx, std::vector<Term> terms) {
  const OrderKind order = ctx->order;
  for (const Term& t : terms) {
    if (t.monomial.arity() != ctx->arity()) throw DomainError("term arity does not match context");
  }
  std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return compareMonomials(a.monomial, b.monomial, order) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.isZero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.isZero()) out.pop_back();
  return Polynomial(std::move(ctx), std::move(out));
}

Polynomial Polynomial::constant(ContextPtr ctx, const RingElement& c) {
  const std::size_t n = ctx->arity();
  return fromTerms(std::move(ctx), {Term{c, Monomial(n)}});
}

Polynomial Polynomial::monomial(ContextPtr ctx, const Term& t) {
  return fromTerms(std::move(ctx), {t});
}

const Term& Polynomial::lt() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ctx_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

bool Polynomial::isCanonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient.isZero()) return false;
    if (terms_[i].monomial.arity() != ctx_->arity()) return false;
    if (!ctx_->ring.contains(terms_[i].coefficient)) return false;
    if (i > 0 && compareMonomials(terms_[i - 1].monomial, terms_[i].monomial, ctx_->order) <= 0) return false;
  }
  return true;
}

LeadingData leadingData(const Polynomial& f) {
  if (f.isZero()) return {Term{RingElement(0), Monomial(f.context()->arity())}, true};
  return {f.lt(), false};
}

Polynomial combine(const RingElement& a, const Polynomial& f, const Term& t, const Polynomial& g) {
  requireSameContext(f.ctx_, g.ctx_);
  const OrderKind order = f.order();
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  const bool scaleF = a != RingElement(1);
  const bool shiftG = !t.monomial.isOne();
  auto fi = f.terms_.begin();
  auto gi = g.terms_.begin();
  auto nextG = [&]() {
    Term x{gi->coefficient * t.coefficient, shiftG ? gi->monomial * t.monomial : gi->monomial};
    ++gi;
    return x;
  };
  auto nextF = [&]() {
    Term x = scaleF ? Term{fi->coefficient * a, fi->monomial} : *fi;
    ++fi;
    return x;
  };
  if (a.isZero()) fi = f.terms_.end();
  if (t.coefficient.isZero()) gi = g.terms_.end();

  // The g-side monomials are shifted lazily, so keep one pending term.
  std::optional<Term> pending;
  while (fi != f.terms_.end() || gi != g.terms_.end() || pending) {
    if (!pending && gi != g.terms_.end()) pending = nextG();
    if (fi == f.terms_.end()) {
      out.push_back(std::move(*pending));
      pending.reset();
      continue;
    }
    if (!pending) {
      out.push_back(nextF());
      continue;
    }
    const auto c = compareMonomials(fi->monomial, pending->monomial, order);
    if (c > 0) {
      out.push_back(nextF());
    } else if (c < 0) {
      out.push_back(std::move(*pending));
      pending.reset();
    } else {
      Term x = nextF();
      x.coefficient += pending->coefficient;
      pending.reset();
      if (!x.coefficient.isZero()) out.push_back(std::move(x));
    }
  }
  return Polynomial(f.ctx_, std::move(out));
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
  return combine(RingElement(1), f, Term{RingElement(1), Monomial(f.context()->arity())}, g);
}

Polynomial subtract(const Polynomial& f, const Polynomial& g) {
  return combine(RingElement(1), f, Term{RingElement(-1), Monomial(f.context()->arity())}, g);
}

Polynomial negate(const Polynomial& f) { return scale(f, RingElement(-1)); }

Polynomial scaleByTerm(const Polynomial& f, const Term& t) {
  if (t.coefficient.isZero()) return Polynomial(f.ctx_);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& x : f.terms_) out.push_back({x.coefficient * t.coefficient, x.monomial * t.monomial});
  return Polynomial(f.ctx_, std::move(out));
}

Polynomial scale(const Polynomial& f, const RingElement& c) {
  if (c.isZero()) return Polynomial(f.ctx_);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& x : f.terms_) out.push_back({x.coefficient * c, x.monomial});
  return Polynomial(f.ctx_, std::move(out));
}

Polynomial Polynomial::operator-() const { return negate(*this); }
Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add(f, g); }
Polynomial operator-(const Polynomial& f, const Polynomial& g) { return subtract(f, g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  requireSameContext(f.context(), g.context());
  Polynomial out(f.context());
  for (const Term& t : g.terms()) out = add(out, scaleByTerm(f, t));
  return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.terms_ != g.terms_) return false;
  return f.ctx_ == g.ctx_ || (f.ctx_ && g.ctx_ && *f.ctx_ == *g.ctx_);
}

std::strong_ordering comparePolynomials(const Polynomial& f, const Polynomial& g) {
  const auto ft = f.terms();
  const auto gt = g.terms();
  const std::size_t n = std::min(ft.size(), gt.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compareMonomials(ft[i].monomial, gt[i].monomial, f.order()); c != 0) return c;
    if (auto c = ft[i].coefficient <=> gt[i].coefficient; c != 0) return c;
  }
  return ft.size() <=> gt.size();
}

std::string renderTerm(const Term& t, const PolyContext& ctx) {
  std::string out;
  const RingElement& c = t.coefficient;
  const bool one = c == RingElement(1);
  const bool minusOne = c == RingElement(-1);
  if (t.monomial.isOne()) return c.toString();
  if (minusOne) {
    out = "-";
  } else if (!one) {
    out = c.toString() + "*";
  }
  bool first = true;
  for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
    const Exponent e = t.monomial[i];
    if (e == 0) continue;
    if (!first) out += '*';
    first = false;
    out += ctx.variables[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string render(const Polynomial& f) {
  if (f.isZero()) return "0";
  std::string out;
  for (const Term& t : f.terms()) {
    std::string s = renderTerm(t, *f.context());
    if (!out.empty() && s.front() != '-') out += '+';
    out += s;
  }
  return out;
}

}  // namespace eugb

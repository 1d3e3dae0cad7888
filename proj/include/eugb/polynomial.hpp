#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "eugb/monomial.hpp"
#include "eugb/ring.hpp"

namespace eugb {

/// Shared description of the ambient polynomial ring R[x_1..x_n]:
/// coefficient ring, variable names (in decreasing variable order) and the
/// active monomial order. Polynomials over unequal contexts never mix.
struct PolyContext {
  Ring ring;
  std::vector<std::string> variables;
  OrderKind order = OrderKind::DegRevLex;

  std::size_t arity() const { return variables.size(); }
  friend bool operator==(const PolyContext&, const PolyContext&) = default;
};

using ContextPtr = std::shared_ptr<const PolyContext>;

ContextPtr makeContext(RingKind ring, std::vector<std::string> variables,
                       OrderKind order = OrderKind::DegRevLex);

struct Term {
  RingElement coefficient;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

/// termDivides(s, t): s | t as terms, i.e. the monomial and the coefficient
/// both divide.
bool termDivides(const Ring& ring, const Term& s, const Term& t);
/// t / s; throws DomainError unless termDivides(s, t).
Term termQuotient(const Ring& ring, const Term& t, const Term& s);
/// Coefficient lcm (canonical associate) times monomial lcm.
Term termLcm(const Ring& ring, const Term& s, const Term& t);

/// Leading term, monomial, coefficient and exponent. For the zero polynomial,
/// `isZero` is set and the term is 0 * 1.
struct LeadingData {
  Term term;
  bool isZero = false;

  const Monomial& monomial() const { return term.monomial; }
  const RingElement& coefficient() const { return term.coefficient; }
  std::span<const Exponent> exponent() const { return term.monomial.exponents(); }
};

/// Sparse polynomial: terms strictly descending in the context's order,
/// no zero coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  /// Builds a polynomial from arbitrary terms: sorts, merges equal monomials
  /// and drops zeros.
  static Polynomial fromTerms(ContextPtr ctx, std::vector<Term> terms);
  static Polynomial constant(ContextPtr ctx, const RingElement& c);
  static Polynomial monomial(ContextPtr ctx, const Term& t);

  const ContextPtr& context() const { return ctx_; }
  const Ring& ring() const { return ctx_->ring; }
  OrderKind order() const { return ctx_->order; }

  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  /// Leading accessors; throw DomainError on the zero polynomial.
  const Term& lt() const;
  const Monomial& lm() const { return lt().monomial; }
  const RingElement& lc() const { return lt().coefficient; }

  /// Everything but the leading term.
  Polynomial tail() const;

  /// Structural check of the canonical-form invariant.
  bool isCanonical() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  /// Polynomials are equal when their contexts agree and their terms match.
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  Polynomial(ContextPtr ctx, std::vector<Term> terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

  ContextPtr ctx_;
  std::vector<Term> terms_;

  friend Polynomial scaleByTerm(const Polynomial& f, const Term& t);
  friend Polynomial scale(const Polynomial& f, const RingElement& c);
  friend Polynomial combine(const RingElement& a, const Polynomial& f, const Term& t,
                            const Polynomial& g);
};

LeadingData leadingData(const Polynomial& f);

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial subtract(const Polynomial& f, const Polynomial& g);
Polynomial negate(const Polynomial& f);
Polynomial scaleByTerm(const Polynomial& f, const Term& t);
Polynomial scale(const Polynomial& f, const RingElement& c);
/// a*f + t*g in a single merge.
Polynomial combine(const RingElement& a, const Polynomial& f, const Term& t, const Polynomial& g);

/// Total order on polynomials of one context: compares term by term from the
/// top (monomial first, then coefficient), shorter prefix first. Used for
/// deterministic tie-breaking only.
std::strong_ordering comparePolynomials(const Polynomial& f, const Polynomial& g);

/// Throws DomainError when two contexts differ.
void requireSameContext(const ContextPtr& a, const ContextPtr& b);

/// Canonical text: descending terms, "-" folded into coefficients, "*"
/// between factors and "^" for powers, e.g. "-b^2+d^2".
std::string render(const Polynomial& f);
std::string renderTerm(const Term& t, const PolyContext& ctx);

}  // namespace eugb

#include "eugb/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "eugb/errors.hpp"

namespace eugb {
namespace {

void requireSameArity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw DomainError("monomial arity mismatch");
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0})) {}

Monomial operator*(const Monomial& a, const Monomial& b) {
  requireSameArity(a, b);
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (a[i] > std::numeric_limits<Exponent>::max() - b[i]) throw DomainError("exponent overflow");
    e[i] = a[i] + b[i];
  }
  return Monomial(std::move(e));
}

std::string_view toString(OrderKind order) {
  switch (order) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::DegLex:
      return "deglex";
    case OrderKind::DegRevLex:
      return "degrevlex";
  }
  return "?";
}

std::strong_ordering compareMonomials(const Monomial& a, const Monomial& b, OrderKind order) {
  requireSameArity(a, b);
  const std::size_t n = a.arity();
  if (order != OrderKind::Lex && a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (order == OrderKind::DegRevLex) {
    // Equal degree: the monomial with the smaller exponent in the last
    // differing variable is the larger one.
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

Monomial monomialLcm(const Monomial& a, const Monomial& b) {
  requireSameArity(a, b);
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial monomialGcd(const Monomial& a, const Monomial& b) {
  requireSameArity(a, b);
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

bool monomialDivides(const Monomial& a, const Monomial& b) {
  requireSameArity(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial monomialQuotient(const Monomial& b, const Monomial& a) {
  if (!monomialDivides(a, b)) throw DomainError("monomial quotient of non-divisible pair");
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = b[i] - a[i];
  return Monomial(std::move(e));
}

bool monomialsCoprime(const Monomial& a, const Monomial& b) {
  requireSameArity(a, b);
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

}  // namespace eugb

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace eugb {

using Exponent = std::uint32_t;

/// Exponent vector x^alpha of fixed arity. Variable 0 is the largest variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exponents_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);

  std::size_t arity() const { return exponents_.size(); }
  std::uint64_t degree() const { return degree_; }
  bool isOne() const { return degree_ == 0; }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const { return exponents_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Product; throws DomainError on exponent overflow.
  friend Monomial operator*(const Monomial& a, const Monomial& b);

 private:
  std::vector<Exponent> exponents_;
  std::uint64_t degree_ = 0;
};

enum class OrderKind { Lex, DegLex, DegRevLex };

std::string_view toString(OrderKind order);

/// Global monomial order comparison. Throws DomainError on arity mismatch.
std::strong_ordering compareMonomials(const Monomial& a, const Monomial& b, OrderKind order);

Monomial monomialLcm(const Monomial& a, const Monomial& b);
Monomial monomialGcd(const Monomial& a, const Monomial& b);
/// Componentwise a <= b.
bool monomialDivides(const Monomial& a, const Monomial& b);
/// b / a; throws DomainError unless a | b.
Monomial monomialQuotient(const Monomial& b, const Monomial& a);
bool monomialsCoprime(const Monomial& a, const Monomial& b);

}  // namespace eugb

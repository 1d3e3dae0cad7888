#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "eugb/parser.hpp"
#include "eugb/polynomial.hpp"

namespace eugb {

inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << render(p); }

}  // namespace eugb

namespace eugb::testing {

inline ContextPtr xyz(RingKind ring = RingKind::Integers, OrderKind order = OrderKind::DegRevLex) {
  return makeContext(ring, {"x", "y", "z"}, order);
}

inline Polynomial P(const ContextPtr& ctx, const std::string& text) { return parsePolynomial(text, ctx); }

inline std::vector<Polynomial> Ps(const ContextPtr& ctx, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(ctx, t));
  return out;
}

/// Order-insensitive comparison of polynomial lists.
inline bool sameSet(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  auto less = [](const Polynomial& f, const Polynomial& g) { return comparePolynomials(f, g) < 0; };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

inline Term T(const ContextPtr& ctx, const std::string& text) { return P(ctx, text).lt(); }

inline Monomial M(std::initializer_list<Exponent> e) { return Monomial(std::vector<Exponent>(e)); }

}  // namespace eugb::testing

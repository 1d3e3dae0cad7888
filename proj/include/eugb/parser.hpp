#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eugb/polynomial.hpp"

namespace eugb {

/// Input error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct GeneratorLine {
  std::string text;
  std::size_t line = 0;
};

/// A problem description:
///
///     ring: integers            # or rationals
///     vars: a,b,c,d
///     order: degrevlex          # lex | deglex | degrevlex
///     2*a*b*c*d-2
///     a+b+c+d
///
/// Headers come first and may each appear once; `vars` is required. `#`
/// starts a comment. Each remaining non-empty line is one generator.
struct ProblemFile {
  RingKind ring = RingKind::Integers;
  std::vector<std::string> variables;
  OrderKind order = OrderKind::DegRevLex;
  std::vector<GeneratorLine> generators;
};

ProblemFile parseProblem(std::string_view text);

/// Infix polynomial: integer or p/q coefficients, `^` powers, optional `*`.
/// `line` is only used for error positions.
Polynomial parsePolynomial(std::string_view text, const ContextPtr& ctx, std::size_t line = 1);

std::vector<Polynomial> generators(const ProblemFile& problem, const ContextPtr& ctx);

OrderKind parseOrder(std::string_view name);
RingKind parseRing(std::string_view name);

}  // namespace eugb

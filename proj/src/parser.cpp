#include "eugb/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <set>

#include "eugb/errors.hpp"

namespace eugb {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

OrderKind parseOrder(std::string_view name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "deglex") return OrderKind::DegLex;
  if (name == "degrevlex") return OrderKind::DegRevLex;
  throw std::invalid_argument("unknown monomial order '" + std::string(name) + "'");
}

RingKind parseRing(std::string_view name) {
  if (name == "integers") return RingKind::Integers;
  if (name == "rationals") return RingKind::Rationals;
  throw std::invalid_argument("unknown ring '" + std::string(name) + "'");
}

namespace {

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool isSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && isSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && isSpace(s.back())) s.remove_suffix(1);
  return s;
}

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of line";
  return "'" + std::string(t.text) + "'";
}

class PolyParser {
 public:
  PolyParser(std::string_view text, const ContextPtr& ctx, std::size_t line, std::size_t columnOffset)
      : text_(text), ctx_(ctx), line_(line), offset_(columnOffset) {
    tokenize();
  }

  Polynomial parse() {
    std::vector<Term> terms;
    if (peek().kind == Tok::End) fail(peek(), "expected a polynomial");
    bool negative = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negative = next().kind == Tok::Minus;
    terms.push_back(parseTerm(negative));
    while (peek().kind != Tok::End) {
      const Token op = next();
      if (op.kind != Tok::Plus && op.kind != Tok::Minus) fail(op, "expected '+' or '-', got " + describe(op));
      terms.push_back(parseTerm(op.kind == Tok::Minus));
    }
    return Polynomial::fromTerms(ctx_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(line_, offset_ + t.column, message);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool startsFactor(const Token& t) const { return t.kind == Tok::Number || t.kind == Tok::Ident; }

  Term parseTerm(bool negative) {
    if (!startsFactor(peek())) fail(peek(), "expected a coefficient or variable, got " + describe(peek()));
    RingElement coeff(negative ? -1 : 1);
    std::vector<Exponent> exps(ctx_->arity(), 0);
    while (true) {
      parseFactor(coeff, exps);
      if (peek().kind == Tok::Star) {
        next();
        if (!startsFactor(peek())) fail(peek(), "expected a factor after '*', got " + describe(peek()));
        continue;
      }
      if (startsFactor(peek())) continue;  // implicit product
      break;
    }
    return Term{std::move(coeff), Monomial(std::move(exps))};
  }

  void parseFactor(RingElement& coeff, std::vector<Exponent>& exps) {
    const Token t = next();
    if (t.kind == Tok::Number) {
      mpz_class num(std::string(t.text));
      mpz_class den = 1;
      if (peek().kind == Tok::Slash) {
        next();
        const Token d = next();
        if (d.kind != Tok::Number) fail(d, "malformed coefficient: expected a denominator");
        den = mpz_class(std::string(d.text));
        if (den == 0) fail(d, "malformed coefficient: zero denominator");
      }
      RingElement value(num, den);
      if (!ctx_->ring.contains(value)) fail(t, "malformed coefficient: " + value.toString() + " is not an integer");
      coeff *= value;
      return;
    }
    const std::vector<std::size_t> factors = splitVariables(t.text);
    if (factors.empty()) fail(t, "unknown variable '" + std::string(t.text) + "'");
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) bump(exps, factors[i], 1, t);
    std::uint64_t power = 1;
    if (peek().kind == Tok::Caret) {
      next();
      const Token e = next();
      if (e.kind != Tok::Number) fail(e, "expected an exponent after '^'");
      if (e.text.size() > 9) fail(e, "exponent too large");
      power = std::stoull(std::string(e.text));
    }
    bump(exps, factors.back(), power, t);
  }

  void bump(std::vector<Exponent>& exps, std::size_t var, std::uint64_t power, const Token& t) {
    if (exps[var] + power > std::numeric_limits<Exponent>::max()) fail(t, "exponent too large");
    exps[var] += static_cast<Exponent>(power);
  }

  // An identifier is either a declared variable or a juxtaposition of them
  // ("xy" for x*y). Longer names are tried first. Empty when no split exists.
  std::vector<std::size_t> splitVariables(std::string_view word) const {
    const auto& vars = ctx_->variables;
    if (word.empty()) return {};
    std::vector<std::size_t> order(vars.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vars[a].size() > vars[b].size(); });
    for (std::size_t v : order) {
      if (word.substr(0, vars[v].size()) != vars[v]) continue;
      if (word.size() == vars[v].size()) return {v};
      std::vector<std::size_t> rest = splitVariables(word.substr(vars[v].size()));
      if (rest.empty()) continue;
      rest.insert(rest.begin(), v);
      return rest;
    }
    return {};
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (isSpace(c)) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      Tok kind;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
        kind = Tok::Number;
      } else if (isIdentStart(c)) {
        while (i < text_.size() && isIdentChar(text_[i])) ++i;
        kind = Tok::Ident;
      } else {
        switch (c) {
          case '+': kind = Tok::Plus; break;
          case '-': kind = Tok::Minus; break;
          case '*': kind = Tok::Star; break;
          case '^': kind = Tok::Caret; break;
          case '/': kind = Tok::Slash; break;
          default:
            throw ParseError(line_, offset_ + i + 1, std::string("unexpected character '") + c + "'");
        }
        ++i;
      }
      tokens_.push_back({kind, text_.substr(start, i - start), start + 1});
    }
    tokens_.push_back({Tok::End, {}, text_.size() + 1});
  }

  std::string_view text_;
  const ContextPtr& ctx_;
  std::size_t line_;
  std::size_t offset_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::optional<std::string_view> headerKey(std::string_view line) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string_view key = trim(line.substr(0, colon));
  if (key.empty() || !std::all_of(key.begin(), key.end(), isIdentChar)) return std::nullopt;
  return key;
}

}  // namespace

Polynomial parsePolynomial(std::string_view text, const ContextPtr& ctx, std::size_t line) {
  return PolyParser(text, ctx, line, 0).parse();
}

ProblemFile parseProblem(std::string_view text) {
  ProblemFile problem;
  std::set<std::string> seen;
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineNo;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) continue;

    const std::size_t indent = raw.find_first_not_of(" \t") + 1;
    if (const auto key = headerKey(raw)) {
      if (*key != "ring" && *key != "vars" && *key != "order") {
        throw ParseError(lineNo, indent, "unknown header '" + std::string(*key) + "'");
      }
      if (!problem.generators.empty()) {
        throw ParseError(lineNo, indent, "header '" + std::string(*key) + "' after generators");
      }
      if (!seen.insert(std::string(*key)).second) {
        throw ParseError(lineNo, indent, "duplicate header '" + std::string(*key) + "'");
      }
      const std::size_t valueStart = raw.find(':') + 1;
      const std::string_view value = trim(raw.substr(valueStart));
      const std::size_t valueColumn = valueStart + 1 + (raw.substr(valueStart).find_first_not_of(" \t"));
      try {
        if (*key == "ring") problem.ring = parseRing(value);
        if (*key == "order") problem.order = parseOrder(value);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineNo, valueColumn, e.what());
      }
      if (*key == "vars") {
        std::size_t start = 0;
        while (start <= value.size()) {
          const std::size_t comma = std::min(value.find(',', start), value.size());
          const std::string_view name = trim(value.substr(start, comma - start));
          const std::size_t col = valueColumn + start;
          if (name.empty() || !isIdentStart(name.front()) ||
              !std::all_of(name.begin(), name.end(), isIdentChar)) {
            throw ParseError(lineNo, col, "invalid variable name '" + std::string(name) + "'");
          }
          if (std::find(problem.variables.begin(), problem.variables.end(), name) != problem.variables.end()) {
            throw ParseError(lineNo, col, "duplicate variable '" + std::string(name) + "'");
          }
          problem.variables.emplace_back(name);
          start = comma + 1;
        }
      }
      continue;
    }
    if (problem.variables.empty()) throw ParseError(lineNo, indent, "missing 'vars:' header before generators");
    problem.generators.push_back({std::string(raw), lineNo});
  }
  if (problem.variables.empty()) throw ParseError(lineNo, 1, "missing 'vars:' header");
  if (problem.generators.empty()) throw ParseError(lineNo, 1, "no generators");

  // Validate every generator against the declared ring and variables.
  generators(problem, makeContext(problem.ring, problem.variables, problem.order));
  return problem;
}

std::vector<Polynomial> generators(const ProblemFile& problem, const ContextPtr& ctx) {
  std::vector<Polynomial> out;
  out.reserve(problem.generators.size());
  for (const GeneratorLine& g : problem.generators) out.push_back(parsePolynomial(g.text, ctx, g.line));
  return out;
}

}  // namespace eugb

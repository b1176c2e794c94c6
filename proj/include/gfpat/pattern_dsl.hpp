#pragma once

// Pattern expressions: flat sums of fractions over GF(2)[x, y, 1/x, 1/y].
//
//   expr   := term { ('+' | '-') term }
//   term   := factor [ '/' factor ]
//   factor := atom { ['*'] atom }
//   atom   := '0' | '1' | var | '(' expr ')'
//   var    := ('x' | 'y') [ '^' signed-integer ]
//
// '-' means '+' (characteristic 2). A parenthesized atom must not contain a
// division. Error offsets are 0-based byte positions.

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gfpat/core_poly.hpp"
#include "gfpat/quotient_ring.hpp"
#include "gfpat/series_expand.hpp"

namespace gfpat {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised by evaluate(); term_index is 0-based.
class EvaluationError : public std::domain_error {
 public:
  EvaluationError(const std::string& what, std::size_t term_index)
      : std::domain_error("term " + std::to_string(term_index + 1) + ": " + what),
        term_index_(term_index) {}

  std::size_t term_index() const { return term_index_; }

 private:
  std::size_t term_index_;
};

enum class TokenKind { number, x, y, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  TokenKind kind;
  std::int64_t value = 0;  // numbers only
  std::size_t offset = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits text into tokens. A '-' directly after '^' and followed by a digit
/// is part of the exponent literal. The result always ends with an `end`
/// token.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  auto read_number = [&](std::size_t start, bool negative) {
    std::int64_t v = 0;
    std::size_t k = start;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
      v = v * 10 + (text[k] - '0');
      if (v > kExponentLimit) throw ParseError("integer literal too large", start);
      ++k;
    }
    return std::pair{negative ? -v : v, k};
  };

  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    const bool after_caret = !out.empty() && out.back().kind == TokenKind::caret;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto [v, next] = read_number(pos, false);
      out.push_back({TokenKind::number, v, pos});
      pos = next;
      continue;
    }
    if (c == '-' && after_caret && pos + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
      auto [v, next] = read_number(pos + 1, true);
      out.push_back({TokenKind::number, v, pos});
      pos = next;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case 'x': kind = TokenKind::x; break;
      case 'y': kind = TokenKind::y; break;
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '/': kind = TokenKind::slash; break;
      case '^': kind = TokenKind::caret; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos);
    }
    out.push_back({kind, 0, pos});
    ++pos;
  }
  out.push_back({TokenKind::end, 0, text.size()});
  return out;
}

struct ExprTerm {
  Poly numerator;
  std::optional<Poly> denominator;

  friend bool operator==(const ExprTerm&, const ExprTerm&) = default;
};

struct PatternExpr {
  std::vector<ExprTerm> terms;

  friend bool operator==(const PatternExpr&, const PatternExpr&) = default;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  PatternExpr parse_all() {
    PatternExpr e;
    e.terms = parse_expr();
    if (peek().kind != TokenKind::end) {
      throw ParseError("unexpected " + describe(peek()), peek().offset);
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case TokenKind::number: return "number " + std::to_string(t.value);
      case TokenKind::x: return "'x'";
      case TokenKind::y: return "'y'";
      case TokenKind::plus: return "'+'";
      case TokenKind::minus: return "'-'";
      case TokenKind::star: return "'*'";
      case TokenKind::slash: return "'/'";
      case TokenKind::caret: return "'^'";
      case TokenKind::lparen: return "'('";
      case TokenKind::rparen: return "')'";
      case TokenKind::end: return "end of input";
    }
    return "token";
  }

  std::vector<ExprTerm> parse_expr() {
    std::vector<ExprTerm> terms;
    terms.push_back(parse_term());
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      take();
      terms.push_back(parse_term());
    }
    return terms;
  }

  ExprTerm parse_term() {
    ExprTerm t;
    t.numerator = parse_factor();
    if (peek().kind == TokenKind::slash) {
      const std::size_t slash_at = take().offset;
      const std::size_t denom_at = peek().offset;
      if (paren_depth_ > 0) throw ParseError("nested division", slash_at);
      t.denominator = parse_factor();
      if (t.denominator->empty()) throw ParseError("zero denominator", denom_at);
      if (peek().kind == TokenKind::slash) throw ParseError("nested division", peek().offset);
    }
    return t;
  }

  Poly parse_factor() {
    Poly value = parse_atom();
    for (;;) {
      const auto k = peek().kind;
      if (k == TokenKind::star) {
        take();
        value *= parse_atom();
      } else if (k == TokenKind::number || k == TokenKind::x || k == TokenKind::y ||
                 k == TokenKind::lparen) {
        value *= parse_atom();
      } else {
        return value;
      }
    }
  }

  Poly parse_atom() {
    const Token t = take();
    switch (t.kind) {
      case TokenKind::number:
        if (t.value == 1) return Poly::one();
        if (t.value == 0) return Poly{};
        throw ParseError("coefficient must be 0 or 1", t.offset);
      case TokenKind::x:
      case TokenKind::y: {
        std::int64_t e = 1;
        if (peek().kind == TokenKind::caret) {
          take();
          const Token& num = take();
          if (num.kind != TokenKind::number) {
            throw ParseError("expected exponent after '^'", num.offset);
          }
          e = num.value;
        }
        const int exp = checked_exponent(e);
        return t.kind == TokenKind::x ? Poly::monomial(exp, 0) : Poly::monomial(0, exp);
      }
      case TokenKind::lparen: {
        ++paren_depth_;
        const auto inner = parse_expr();
        --paren_depth_;
        if (peek().kind != TokenKind::rparen) {
          throw ParseError("expected ')' but found " + describe(peek()), peek().offset);
        }
        take();
        Poly sum;
        for (const auto& term : inner) sum += term.numerator;
        return sum;
      }
      default:
        throw ParseError("unexpected " + describe(t), t.offset);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int paren_depth_ = 0;
};

}  // namespace detail

inline PatternExpr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Parses a plain polynomial (an expression without division).
inline Poly parse_poly(std::string_view text) {
  const auto e = parse(text);
  Poly sum;
  for (const auto& t : e.terms) {
    if (t.denominator) throw ParseError("division not allowed in a polynomial", 0);
    sum += t.numerator;
  }
  return sum;
}

/// Canonical text: polynomials in canonical form, parenthesized when they
/// have more than one term, terms joined by " + ".
inline std::string to_string(const PatternExpr& e) {
  auto group = [](const Poly& p) {
    return p.size() > 1 ? "(" + to_string(p) + ")" : to_string(p);
  };
  std::string out;
  for (const auto& t : e.terms) {
    if (!out.empty()) out += " + ";
    out += group(t.numerator);
    if (t.denominator) out += "/" + group(*t.denominator);
  }
  return out;
}

/// Window mode sums the series expansions of the terms. Wrap mode works in
/// GF(2)[x,y]/(x^(m+1) - 1, y^(n+1) - 1), one residue per grid cell, and
/// divides by multiplying with the ring inverse.
inline Poly evaluate(const PatternExpr& e, const Window& w) {
  Poly sum;
  if (w.mode == EvalMode::window) {
    for (std::size_t k = 0; k < e.terms.size(); ++k) {
      const auto& t = e.terms[k];
      if (!t.denominator) {
        sum += truncate(t.numerator, w);
        continue;
      }
      try {
        sum += eval_term({t.numerator, *t.denominator}, w);
      } catch (const InadmissibleDenominator& err) {
        throw EvaluationError(err.what(), k);
      }
    }
    return sum;
  }

  const RingSpec ring(w.m + 1, w.n + 1);
  RingElement acc = reduce(Poly{}, ring);
  for (std::size_t k = 0; k < e.terms.size(); ++k) {
    const auto& t = e.terms[k];
    RingElement value = reduce(t.numerator, ring);
    if (t.denominator) {
      const auto inv = inverse(reduce(*t.denominator, ring), ring);
      if (!inv) {
        throw EvaluationError("denominator " + to_string(*t.denominator) +
                                  " is not invertible modulo x^" + std::to_string(ring.m) +
                                  "-1, y^" + std::to_string(ring.n) + "-1",
                              k);
      }
      value = ring_mul(value, *inv, ring);
    }
    acc = ring_add(acc, value, ring);
  }
  return acc.poly();
}

}  // namespace gfpat

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "polemono/errors.hpp"
#include "polemono/polynomial.hpp"
#include "polemono/rational.hpp"

namespace polemono {

// Recursive-descent parser for curve equations in Q[x,y,z].
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/')? factor)*      juxtaposition multiplies
//   factor := '-' factor | atom ('^' integer)?
//   atom   := integer | 'x'|'y'|'z' | '(' expr ')'
//
// Division is restricted to nonzero constant divisors, so "x^3/2" is the
// monomial with coefficient 1/2 while "1/x" is a syntax error.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Integer parse_integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Polynomial parse_expr() {
    Polynomial p = parse_term();
    while (true) {
      if (eat('+')) {
        p += parse_term();
      } else if (eat('-')) {
        p -= parse_term();
      } else {
        return p;
      }
    }
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' ||
           c == '(';
  }

  Polynomial parse_term() {
    Polynomial p = parse_factor();
    while (true) {
      if (eat('*')) {
        p = p * parse_factor();
      } else if (eat('/')) {
        Polynomial d = parse_factor();
        if (!d.is_constant() || d.is_zero())
          fail("division is only supported by nonzero constants");
        p = p.scaled(Rational(1) / d.constant_value());
      } else if (starts_factor(peek())) {
        p = p * parse_factor();
      } else {
        return p;
      }
    }
  }

  Polynomial parse_factor() {
    if (eat('-')) return -parse_factor();
    Polynomial base = parse_atom();
    if (eat('^')) {
      Integer e = parse_integer();
      if (e > 512) fail("exponent too large");
      return base.pow(e.get_ui());
    }
    return base;
  }

  Polynomial parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return Polynomial::variable(c == 'x' ? 0 : c == 'y' ? 1 : 2);
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial::constant(Rational(parse_integer()));
    fail("expected variable, integer or '('");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

inline Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

// Parse and validate a homogeneous curve equation.
inline HomogPoly parse_homogeneous(std::string_view text) {
  return HomogPoly::validate(parse_polynomial(text));
}

}  // namespace polemono

#pragma once

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

#include "toprec/alg/rat.hpp"
#include "toprec/errors.hpp"

namespace toprec::alg {

/// Recursive-descent parser for ring expressions with +, -, *, ^ (non-negative
/// integer exponents), parentheses, integer literals, division by literal
/// rationals and identifiers (optionally followed by primes). The ring element
/// for an identifier comes from the resolver.
template <class T>
class ExpressionParser {
 public:
  using Resolver = std::function<T(const std::string&)>;

  ExpressionParser(std::string_view text, Resolver resolve) : s_(text), resolve_(std::move(resolve)) {}

  T parse() {
    T v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    T v = term();
    while (true) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }

  T term() {
    T v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        Rat d = literal_factor();
        v = v * T(d.inverse());
      } else {
        return v;
      }
    }
  }

  // Divisors must be rational constants: a literal, a parenthesized literal
  // expression, or a literal power.
  Rat literal_factor() {
    skip();
    Rat base;
    if (eat('(')) {
      base = literal_expr();
      if (!eat(')')) fail("expected ')'");
    } else {
      base = Rat(integer());
    }
    if (eat('^')) base = base.pow(static_cast<int>(integer().get_si()));
    return base;
  }
  Rat literal_expr() {
    Rat v = literal_term();
    while (true) {
      if (eat('+')) v += literal_term();
      else if (eat('-')) v -= literal_term();
      else return v;
    }
  }
  Rat literal_term() {
    bool neg = false;
    while (eat('-')) neg = !neg;
    Rat v = literal_factor();
    while (true) {
      if (eat('*')) v *= literal_factor();
      else if (eat('/')) v /= literal_factor();
      else break;
    }
    return neg ? -v : v;
  }

  T unary() {
    if (eat('-')) return T(0) - unary();
    if (eat('+')) return unary();
    return power();
  }

  T power() {
    T base = atom();
    if (eat('^')) {
      skip();
      long e = integer().get_si();
      T r(1);
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  T atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return T(Rat(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      while (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
      return resolve_(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  Resolver resolve_;
  std::size_t pos_ = 0;
};

template <class T>
T parse_expression(std::string_view text, typename ExpressionParser<T>::Resolver resolve) {
  return ExpressionParser<T>(text, std::move(resolve)).parse();
}

class Poly;
/// Parses a univariate polynomial such as "z^3 - 3*z" or "1/2*z^2 - 2"; the
/// only identifier accepted is var.
Poly parse_poly(std::string_view text, const std::string& var = "z");

}  // namespace toprec::alg

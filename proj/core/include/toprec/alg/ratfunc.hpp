#pragma once

#include <string>

#include "toprec/alg/poly.hpp"

namespace toprec::alg {

/// Univariate rational function num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly(Rat(1))) {}
  RatFunc(const Rat& c) : num_(c), den_(Poly(Rat(1))) {}  // NOLINT
  template <std::integral I>
  RatFunc(I c) : RatFunc(Rat(c)) {}  // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(Poly(Rat(1)).with_var(p.var())) {}  // NOLINT
  RatFunc(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  const std::string& var() const { return num_.is_constant() ? den_.var() : num_.var(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const;
  RatFunc derivative() const;
  /// Throws EvalAtPole when den(x) = 0.
  Rat eval(const Rat& x) const;
  /// Residue of f(z) dz at z = a.
  Rat residue_at(const Rat& a) const;
  /// Residue of f(z) dz at infinity, i.e. minus the coefficient of 1/z.
  Rat residue_at_infinity() const;
  /// Order of vanishing at infinity: deg den - deg num (large for zero).
  int order_at_infinity() const;

  /// Canonical rendering, e.g. "-7/373248 * (z^2+3) / z^4".
  std::string str() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace toprec::alg

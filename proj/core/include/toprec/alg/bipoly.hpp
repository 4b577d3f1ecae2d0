#pragma once

#include <string>
#include <vector>

#include "toprec/alg/poly.hpp"
#include "toprec/alg/rat.hpp"

namespace toprec::alg {

/// Polynomial in two variables x, y over Q; coeffs()[i][j] multiplies x^i y^j.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Rat& c);  // NOLINT
  template <std::integral I>
  BiPoly(I c) : BiPoly(Rat(c)) {}  // NOLINT
  explicit BiPoly(std::vector<std::vector<Rat>> coeffs);

  static BiPoly x();
  static BiPoly y();
  /// Embeds a univariate polynomial as a polynomial in x (or y).
  static BiPoly from_x(const Poly& p);
  static BiPoly from_y(const Poly& p);

  bool is_zero() const { return c_.empty(); }
  int deg_x() const { return static_cast<int>(c_.size()) - 1; }
  int deg_y() const;
  const Rat& coeff(int i, int j) const;
  const std::vector<std::vector<Rat>>& coeffs() const { return c_; }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rat& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rat& s) { return a *= s; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

  /// Coefficient of y^j as a polynomial in x.
  Poly y_coeff(int j, std::string var = "x") const;
  /// Coefficient of x^i as a polynomial in y.
  Poly x_coeff(int i, std::string var = "y") const;
  Rat eval(const Rat& x, const Rat& y) const;

  /// If *this == c * o for a nonzero rational c, returns true and sets c.
  bool proportional_to(const BiPoly& o, Rat* c = nullptr) const;

  /// Rendering in x, y with descending total degree, e.g. "-x^3+y^2".
  std::string str() const;

 private:
  void trim();
  std::vector<std::vector<Rat>> c_;
};

}  // namespace toprec::alg

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toprec/alg/rat.hpp"

namespace toprec::alg {

/// Dense univariate polynomial over Q. Coefficients are stored from degree 0
/// upward with no trailing zeros; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c);  // NOLINT: constants convert implicitly
  template <std::integral I>
  Poly(I c) : Poly(Rat(c)) {}  // NOLINT
  explicit Poly(std::vector<Rat> coeffs, std::string var = "z");

  static Poly monomial(const Rat& c, int degree, std::string var = "z");
  static Poly variable(std::string var = "z") { return monomial(1, 1, std::move(var)); }

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rat& coeff(int i) const;
  const Rat& lead() const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const std::string& var() const { return var_; }
  Poly with_var(std::string var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<Poly, Poly> divrem(const Poly& d) const;
  Poly derivative() const;
  Rat eval(const Rat& x) const;
  /// this(inner(z)).
  Poly compose(const Poly& inner) const;
  Poly pow(unsigned e) const;
  /// this(z + a).
  Poly shift(const Rat& a) const;
  Poly monic() const;

  /// Canonical rendering in descending powers, e.g. "z^2+3", "-1/2*z+1".
  std::string str() const;

 private:
  void trim();
  void check_var(const Poly& o) const;
  std::vector<Rat> c_;
  std::string var_ = "z";
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct RationalRoots {
  std::vector<std::pair<Rat, int>> roots;  // (root, multiplicity), ascending
  Poly cofactor;                           // p / prod (z - r)^m
};

/// All rational roots of p != 0, via the rational root theorem and deflation.
RationalRoots rational_roots(const Poly& p);

}  // namespace toprec::alg

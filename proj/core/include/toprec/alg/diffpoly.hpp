#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "toprec/alg/poly.hpp"
#include "toprec/alg/puiseux.hpp"

namespace toprec::alg {

/// One factor s^(j): generator s differentiated j times in t.
struct Factor {
  std::string gen;
  int order = 0;
  friend auto operator<=>(const Factor&, const Factor&) = default;
  std::string str() const { return gen + std::string(static_cast<std::size_t>(order), '\''); }
};

/// Sorted product of factors with positive exponents.
using Monomial = std::map<Factor, int>;

/// Generators named t1, t2, ... are integration constants: d/dt kills them.
bool is_constant_generator(const std::string& gen);

/// Polynomial in the jets of a set of generators with coefficients in Q[hbar].
class DiffPoly {
 public:
  DiffPoly() = default;
  DiffPoly(const Rat& c);  // NOLINT
  template <std::integral I>
  DiffPoly(I c) : DiffPoly(Rat(c)) {}  // NOLINT
  static DiffPoly generator(const std::string& gen, int order = 0);
  static DiffPoly hbar(int power = 1);
  static DiffPoly from_hbar_poly(const Poly& p);

  const std::map<Monomial, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const Rat& s);
  friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.terms_ == b.terms_; }

  /// Total derivative in t (Leibniz rule, s^(j) -> s^(j+1)).
  DiffPoly d_dt() const;

  /// Numeric value with generators' values given for order 0. Derivative jets
  /// and generators missing from the map count as 0.
  Rat evaluate(const std::map<std::string, Rat>& values, const Rat& hbar) const;

  /// Replaces every generator by an hbar series whose coefficients are
  /// PuiseuxSums; dt differentiates one coefficient. The result is truncated
  /// at hbar^order. Throws InsufficientOrder when an input is too short.
  using Dt = std::function<PuiseuxSum(const PuiseuxSum&)>;
  HbarSeries substitute_series(const std::map<std::string, HbarSeries>& gens, const Dt& dt, int order) const;

  /// Restricts the generators to the given values (constants included) and
  /// keeps the rest symbolic.
  DiffPoly substitute_constants(const std::map<std::string, Rat>& values) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Poly& c);
  std::map<Monomial, Poly> terms_;
};

/// Polynomial in x over DiffPoly (coefficient of x^i at index i).
class XDiff {
 public:
  XDiff() = default;
  XDiff(const DiffPoly& c);  // NOLINT
  XDiff(const Rat& c) : XDiff(DiffPoly(c)) {}  // NOLINT
  template <std::integral I>
  XDiff(I c) : XDiff(DiffPoly(Rat(c))) {}  // NOLINT
  explicit XDiff(std::vector<DiffPoly> coeffs);
  static XDiff x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<DiffPoly>& coeffs() const { return c_; }
  DiffPoly coeff(int i) const;

  XDiff operator-() const;
  friend XDiff operator+(const XDiff& a, const XDiff& b);
  friend XDiff operator-(const XDiff& a, const XDiff& b);
  friend XDiff operator*(const XDiff& a, const XDiff& b);
  friend bool operator==(const XDiff& a, const XDiff& b) { return a.c_ == b.c_; }

  XDiff d_dt() const;
  XDiff d_dx() const;
  DiffPoly at_x(const Rat& x) const;
  /// Numeric polynomial in x after evaluating every coefficient.
  Poly evaluate(const std::map<std::string, Rat>& values, const Rat& hbar) const;

  std::string str() const;

 private:
  void trim();
  std::vector<DiffPoly> c_;
};

/// Parses expressions such as "-1/2*hbar*u' - t1" or "(x-u)*(x+2*u)".
/// Symbols: hbar, x (only for XDiff), generator names with trailing primes.
DiffPoly parse_diffpoly(const std::string& text);
XDiff parse_xdiff(const std::string& text);

}  // namespace toprec::alg

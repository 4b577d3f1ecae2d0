#pragma once

#include <utility>
#include <vector>

#include "toprec/alg/laurent.hpp"
#include "toprec/alg/poly.hpp"
#include "toprec/alg/ratfunc.hpp"

namespace toprec::curve {

using alg::Poly;
using alg::Rat;
using alg::Series;

/// Genus-0 spectral curve x = X(z), y = Y(z) with the conventions
/// omega_1^(0) = -Y dX and omega_2^(0) = dz1 dz2 / (z1 - z2)^2.
struct SpectralCurve {
  Poly X;
  Poly Y;
  std::vector<Rat> ramification;  // zeros of X', ascending
};

/// Validates (X, Y): deg X >= 2, X' and Y' without common zero, all zeros of
/// X' rational and simple. Throws NotRegular, RamificationNotRational or
/// RamificationNotSimple.
SpectralCurve build_curve(const Poly& X, const Poly& Y);

/// Local Galois involution at a simple ramification point r: sigma_r(r + t) =
/// r + s(t), with s known modulo t^order.
struct RamPoint {
  Rat r;
  Series s;
  int order = 0;
};

/// Newton iteration on X(r + s) = X(r + t) from s = -t; the result is checked
/// to satisfy X(r + s) = X(r + t) and s(s(t)) = t modulo t^order.
RamPoint galois_series(const SpectralCurve& c, const Rat& r, int order);

/// Coefficient of dz in omega_1^(0): -Y(z) X'(z).
alg::RatFunc omega01_as_ratfunc(const SpectralCurve& c);

struct DoublePointScan {
  /// X and Y agree on a whole family of pairs (the resultant vanishes
  /// identically): the parametrization factors through a nontrivial map.
  bool degenerate = false;
  /// Rational pairs (za, zb), za < zb, with X(za) = X(zb) and Y(za) = Y(zb).
  std::vector<std::pair<Rat, Rat>> rational_pairs;
  /// Double points exist whose z-coordinates are not rational.
  bool has_irrational = false;
};

DoublePointScan double_point_scan(const Poly& X, const Poly& Y);
DoublePointScan double_point_scan(const SpectralCurve& c);

}  // namespace toprec::curve

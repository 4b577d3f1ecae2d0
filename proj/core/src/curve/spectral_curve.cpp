#include "toprec/curve/spectral_curve.hpp"

#include <algorithm>

#include "toprec/alg/bipoly.hpp"
#include "toprec/alg/resultant.hpp"
#include "toprec/errors.hpp"

namespace toprec::curve {

using alg::BiPoly;
using alg::Center;

SpectralCurve build_curve(const Poly& X, const Poly& Y) {
  if (X.var() != Y.var() && !X.is_constant() && !Y.is_constant())
    throw VariableMismatch("X and Y must use the same variable");
  if (X.degree() < 2) throw NotRegular("deg X must be at least 2, got " + std::to_string(X.degree()));
  Poly dX = X.derivative(), dY = Y.derivative();
  if (dY.is_zero() || alg::resultant(dX, dY).is_zero())
    throw NotRegular("dX and dY have a common zero (X = " + X.str() + ", Y = " + Y.str() + ")");
  auto rr = alg::rational_roots(dX);
  if (rr.cofactor.degree() > 0)
    throw RamificationNotRational("X' = " + dX.str() + " has non-rational zeros: " + rr.cofactor.str());
  SpectralCurve c{X, Y, {}};
  for (const auto& [r, m] : rr.roots) {
    if (m > 1) throw RamificationNotSimple("X' has a zero of multiplicity " + std::to_string(m) + " at " + r.str());
    c.ramification.push_back(r);
  }
  return c;
}

namespace {

// H(w, t) = sum_{j>=2} x_j t^(j-2) (1 + w + ... + w^(j-1)) and dH/dw, with x_j the
// Taylor coefficients of X at r; evaluated on a series w modulo t^prec.
std::pair<Series, Series> newton_terms(const Poly& taylor, const Series& w, int prec, const Center& center) {
  int n = taylor.degree();
  Series one = Series::exact({Rat(1)}, 0, center);
  std::vector<Series> wp{one};  // w^i
  for (int i = 1; i < n; ++i) wp.push_back((wp.back() * w).with_order(prec));
  Series H = Series::exact({}, 0, center), Hw = Series::exact({}, 0, center);
  for (int j = 2; j <= n; ++j) {
    const Rat& xj = taylor.coeff(j);
    if (xj.is_zero()) continue;
    Series h = Series::exact({}, 0, center), hw = Series::exact({}, 0, center);
    for (int i = 0; i < j; ++i) {
      h = h + wp[static_cast<std::size_t>(i)];
      if (i > 0) hw = hw + wp[static_cast<std::size_t>(i - 1)] * Rat(i);
    }
    Series tj = Series::monomial(xj, j - 2, center);
    H = H + (tj * h).with_order(prec);
    Hw = Hw + (tj * hw).with_order(prec);
  }
  return {H.with_order(prec), Hw.with_order(prec)};
}

std::vector<Rat> known_coeffs(const Series& s, int upto) {
  std::vector<Rat> c;
  for (int k = 0; k < upto; ++k) c.push_back(s.coefficient(k));
  return c;
}

}  // namespace

RamPoint galois_series(const SpectralCurve& c, const Rat& r, int order) {
  if (order < 2) order = 2;
  Center center = Center::finite(r);
  if (!c.X.derivative().eval(r).is_zero())
    throw RamificationNotSimple(r.str() + " is not a zero of X'");
  Poly taylor = c.X.shift(r).with_var("t");
  if (taylor.coeff(2).is_zero()) throw RamificationNotSimple("X'' vanishes at " + r.str());
  // w = s/t, known modulo t^prec; Newton doubles prec each step.
  int need = order - 1;
  std::vector<Rat> w{Rat(-1)};
  int prec = 1;
  while (prec < need) {
    int next = std::min(2 * prec, need);
    Series wexact = Series::exact(w, 0, center);
    auto [H, Hw] = newton_terms(taylor, wexact, next, center);
    Series step = (H * Hw.inverse(next)).with_order(next);
    Series wn = (wexact - step).with_order(next);
    w = known_coeffs(wn, next);
    prec = next;
  }
  Series wser = Series::truncated(w, 0, need, center);
  Series s = (Series::monomial(Rat(1), 1, center) * wser).with_order(order);

  // Checks: X(r+s) = X(r+t) and s(s(t)) = t modulo t^order.
  Series Xr = Series::from_poly(c.X, r);
  Series diff = Xr.compose(s, order) - Xr.with_order(order);
  for (int k = 0; k < order; ++k)
    if (!diff.coefficient(k).is_zero())
      throw TruncationExhausted("Galois series at " + r.str() + " fails X(r+s) = X(r+t) at t^" + std::to_string(k));
  Series ss = s.compose(s, order) - Series::monomial(Rat(1), 1, center);
  for (int k = 0; k < order; ++k)
    if (!ss.coefficient(k).is_zero())
      throw TruncationExhausted("Galois series at " + r.str() + " is not an involution at t^" + std::to_string(k));
  return RamPoint{r, s, order};
}

alg::RatFunc omega01_as_ratfunc(const SpectralCurve& c) { return alg::RatFunc(-(c.Y * c.X.derivative())); }

namespace {

// (P(a) - P(b)) / (a - b) as a polynomial in b with coefficients in a (the
// BiPoly x-variable).
alg::ZPoly divided_difference(const Poly& P) {
  int n = P.degree();
  alg::ZPoly out(static_cast<std::size_t>(std::max(n, 1)));
  for (int k = 0; k < n; ++k) {
    std::vector<Rat> ca;
    for (int j = k + 1; j <= n; ++j) {
      int i = j - 1 - k;
      if (static_cast<int>(ca.size()) <= i) ca.resize(static_cast<std::size_t>(i) + 1);
      ca[static_cast<std::size_t>(i)] += P.coeff(j);
    }
    out[static_cast<std::size_t>(k)] = BiPoly::from_x(Poly(ca, "a"));
  }
  return out;
}

Poly specialize_a(const alg::ZPoly& p, const Rat& a) {
  std::vector<Rat> c;
  for (const auto& bc : p) c.push_back(bc.eval(a, Rat(0)));
  return Poly(std::move(c), "b");
}

}  // namespace

DoublePointScan double_point_scan(const Poly& X, const Poly& Y) {
  DoublePointScan out;
  alg::ZPoly A = divided_difference(X), B = divided_difference(Y);
  BiPoly res = alg::resultant_z(A, B);
  if (res.is_zero()) {
    out.degenerate = true;
    return out;
  }
  Poly ra = res.y_coeff(0, "a");
  if (ra.degree() <= 0) return out;
  auto roots = alg::rational_roots(ra);
  for (const auto& [a, m] : roots.roots) {
    (void)m;
    Poly g = alg::gcd(specialize_a(A, a), specialize_a(B, a));
    bool found = false;
    if (g.degree() > 0) {
      for (const auto& [b, mb] : alg::rational_roots(g).roots) {
        (void)mb;
        if (b == a) continue;
        found = true;
        if (a < b) out.rational_pairs.emplace_back(a, b);
      }
    }
    if (!found) out.has_irrational = true;
  }
  if (roots.cofactor.degree() > 0) out.has_irrational = true;
  std::sort(out.rational_pairs.begin(), out.rational_pairs.end());
  return out;
}

DoublePointScan double_point_scan(const SpectralCurve& c) { return double_point_scan(c.X, c.Y); }

}  // namespace toprec::curve

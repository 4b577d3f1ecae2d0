#include "toprec/kp/chebyshev.hpp"

#include "toprec/errors.hpp"

namespace toprec::kp {

using alg::Poly;
using alg::Rat;

Poly chebyshev(int l, const std::string& var) {
  if (l < 0) throw UnsupportedOperation("chebyshev: negative degree");
  Poly z = Poly::variable(var);
  Poly a = Poly(Rat(2)).with_var(var);
  if (l == 0) return a;
  Poly b = z;
  for (int i = 1; i < l; ++i) {
    Poly c = z * b - a;
    a = b;
    b = c;
  }
  return b;
}

Rat validate_pair(const Poly& f, const Poly& g, int p, int q) {
  if (f.degree() != q || g.degree() != p)
    throw NotHomogeneousPair("expected deg f = " + std::to_string(q) + " and deg g = " + std::to_string(p) +
                             ", got " + std::to_string(f.degree()) + " and " + std::to_string(g.degree()));
  Poly comb = f * g.derivative() * Rat(q) - g * f.derivative() * Rat(p);
  if (comb.degree() > 0) throw NotHomogeneousPair("q f g' - p g f' = " + comb.str() + " is not constant");
  if (comb.is_zero()) throw NotHomogeneousPair("q f g' - p g f' vanishes identically");
  return comb.coeff(0) / Rat(p + q - 1);
}

}  // namespace toprec::kp

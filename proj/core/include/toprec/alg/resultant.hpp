#pragma once

#include <vector>

#include "toprec/alg/bipoly.hpp"
#include "toprec/alg/poly.hpp"

namespace toprec::alg {

/// A polynomial in z whose coefficients (degree 0 first) are BiPolys in x, y.
using ZPoly = std::vector<BiPoly>;

/// Resultant eliminating z, via the Sylvester determinant.
BiPoly resultant_z(const ZPoly& p, const ZPoly& q);

/// Resultant of two univariate rational polynomials.
Rat resultant(const Poly& p, const Poly& q);

/// X(z) - x as a ZPoly.
ZPoly minus_x(const Poly& X);
/// Y(z) - y as a ZPoly.
ZPoly minus_y(const Poly& Y);

}  // namespace toprec::alg

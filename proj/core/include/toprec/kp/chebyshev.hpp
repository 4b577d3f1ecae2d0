#pragma once

#include <string>

#include "toprec/alg/poly.hpp"

namespace toprec::kp {

/// Monic Chebyshev polynomial with T_l(2 cos a) = 2 cos(l a): T_0 = 2, T_1 = z.
alg::Poly chebyshev(int l, const std::string& var = "z");

/// Checks q f g' - p g f' = (p + q - 1) rho for a nonzero constant rho and
/// returns rho. deg f = q, deg g = p with nonzero leading coefficients.
/// Throws NotHomogeneousPair otherwise.
alg::Rat validate_pair(const alg::Poly& f, const alg::Poly& g, int p, int q);

}  // namespace toprec::kp

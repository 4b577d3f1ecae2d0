#pragma once

#include <vector>

#include "toprec/alg/bipoly.hpp"
#include "toprec/kp/pq_model.hpp"
#include "toprec/kp/string_series.hpp"

namespace toprec::kp {

/// ML - LM - hbar dL/dt + hbar dM/dx; vanishes on solutions.
alg::Matrix<XDiff> lax_discrepancy(const LaxPair& lp);

struct LaxReport {
  int hbar_order = 0;
  std::vector<Rat> x_samples;
  int entries = 0;
  int coefficients_checked = 0;
};

/// Substitutes the string series, known through hbar^hbar_order, into the Lax
/// equation at each sampled x. The equation carries the string equation as
/// hbar d/dt(...), so coefficients hbar^0 .. hbar^(hbar_order + 1) are checked.
/// An empty sample list uses deg_x + 2 points 0, 1, 2, ...
/// Throws CompatibilityViolation.
LaxReport verify_lax(const LaxPair& lp, const StringSeries& ss, int hbar_order, std::vector<Rat> x_samples = {});

struct SpectralReport {
  alg::BiPoly char_poly;  // det(y - L(x)) at hbar = 0, u = 1
  alg::BiPoly resultant;  // Res_z(X(z) - x, Y(z) - y)
  Rat ratio;              // char_poly = ratio * resultant
};

/// Throws CurveMismatch when the two polynomials are not proportional.
SpectralReport spectral_det_check(const PQModel& m);

}  // namespace toprec::kp

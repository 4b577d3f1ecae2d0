#pragma once

#include <string>
#include <vector>

#include "toprec/loopeq/correlators.hpp"

namespace toprec::loopeq {

/// Outcome of one identity check; lhs/rhs are canonical renderings.
struct CheckReport {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

/// Rational points where Psi is invertible and L is regular, in a fixed order.
std::vector<Rat> regular_points(const PsiSystem& sys, std::size_t count, std::size_t skip = 0);

/// K(x1,x2) K(x2,x3) = (x1-x3)/((x1-x2)(x2-x3)) K(x1,x3).
CheckReport check_replication(const PsiSystem& sys, const Rat& x1, const Rat& x2, const Rat& x3);

/// sum_a W_n(x^a, fixed...) with x symbolic; fixed has n - 1 entries.
CheckReport check_linear(const PsiSystem& sys, int n, const std::vector<SheetPoint>& fixed);

/// Quadratic loop equation for n = fixed.size() + 1 <= 3, compared with P_n,
/// followed by pole containment in {fixed points} and the poles of L.
CheckReport check_quadratic(const PsiSystem& sys, int n, const std::vector<SheetPoint>& fixed);

/// P_3(x; y1, y2) = -hbar^-1 Tr(L [P1, P2]) / ((x-y1)(x-y2)(y1-y2))
///                  + (1 - (y1-y2)^2 W_2(y1, y2)) / ((x-y1)^2 (x-y2)^2).
/// anticommutator = true gives the variant with Tr({P1, P2} L) / ((x-y1)(x-y2)) and
/// ((y1-y2)^2 W_2 + 1) in the second term, which is not an identity (it is
/// nonzero already for d = 1, where the left side vanishes).
RatFunc quadratic_rhs(const PsiSystem& sys, const SheetPoint& y1, const SheetPoint& y2, bool anticommutator = false);
/// Quadratic n = 3 left side against the anticommutator variant; throws when unequal.
CheckReport check_p3_anticommutator(const PsiSystem& sys, const SheetPoint& y1, const SheetPoint& y2);

/// det(y - L(x0)) = sum_k y^(d-k) hbar^k sum_{a1<...<ak} Wbar_k, plus the
/// y^(d-2) coefficient against hbar^2 P_1(x0).
CheckReport check_spectral_identity(const PsiSystem& sys, const Rat& x0);

/// W_n(p_1..p_n) unchanged under every permutation of the (point, sheet) pairs.
CheckReport check_symmetry(const PsiSystem& sys, const std::vector<SheetPoint>& pts);

/// W_3(x^a, y^b, z^c) with x symbolic has no pole at x = y and x = z.
CheckReport check_w3_regular(const PsiSystem& sys, int a, const SheetPoint& y, const SheetPoint& z);

/// Constant gauge Psi -> G Psi: L -> G L G^-1 and every W_n unchanged.
CheckReport check_gauge_constant(const PsiSystem& sys, const Matrix<Rat>& G);

struct ScalarGaugeReport {
  CheckReport report;
  /// W_1(x^a) unchanged (it is not: it shifts by -g'/g).
  bool w1_invariant = false;
  /// W_1 -> W_1 - g'/g exactly.
  bool w1_shift_exact = false;
};

/// Scalar gauge Psi -> g Psi: L -> L + hbar g'/g, K(x1,x2) -> g(x2)/g(x1) K,
/// projectors and W_n (n >= 2) unchanged, W_1 shifted by -g'/g.
ScalarGaugeReport check_gauge_scalar(const PsiSystem& sys, const RatFunc& g);

/// Throws UnexpectedPole unless every pole of f lies at a root of one of allowed.
void require_poles_within(const RatFunc& f, const std::vector<Poly>& allowed, const std::string& what);

struct SuiteReport {
  std::vector<CheckReport> checks;
  bool pass() const;
};

/// All checks (or the named subset: replication, linear, quadratic, spectral,
/// symmetry, w3, gauge-constant, gauge-scalar) with deterministic sample
/// points. Failures are recorded, not thrown.
SuiteReport run_suite(const PsiSystem& sys, const std::vector<std::string>& names = {});

const std::vector<std::string>& suite_check_names();

}  // namespace toprec::loopeq

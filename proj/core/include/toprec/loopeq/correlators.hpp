#pragma once

#include <map>
#include <vector>

#include "toprec/loopeq/psi_system.hpp"

namespace toprec::loopeq {

/// Determinantal correlators built from K(x1, x2) = Psi^-1(x1) Psi(x2) / (x1 - x2).
/// Values are rational functions of x (constants when every point is numeric).
class Correlators {
 public:
  explicit Correlators(const PsiSystem& sys) : sys_(&sys) {}

  const PsiSystem& system() const { return *sys_; }

  /// K(a, b) for distinct points.
  Matrix<RatFunc> kernel(const Point& a, const Point& b) const;
  /// K_ab(x, x) regularized: -hbar^-1 (Psi^-1 L Psi)_ab at coinciding points,
  /// K_ab(x1, x2) otherwise.
  RatFunc entry(const SheetPoint& i, const SheetPoint& j) const;

  /// W_n = (-1)^(n+1) sum over n-cycles of prod K; W_1 = -hbar^-1 (Psi^-1 L Psi)_aa.
  RatFunc W(const std::vector<SheetPoint>& pts) const;
  /// det of the regularized kernel matrix (W_1 on the diagonal).
  RatFunc W_bar(const std::vector<SheetPoint>& pts) const;
  /// P(x^a) = Psi E_aa Psi^-1.
  Matrix<RatFunc> projector(const SheetPoint& p) const;

 private:
  const Matrix<RatFunc>& psi(const Point& p) const;
  const Matrix<RatFunc>& psi_inv(const Point& p) const;
  const Matrix<RatFunc>& conj_L(const Point& p) const;

  const PsiSystem* sys_;
  mutable std::map<Point, Matrix<RatFunc>> psi_cache_, inv_cache_, conj_cache_;
};

}  // namespace toprec::loopeq

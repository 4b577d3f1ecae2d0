#pragma once

#include <cstdint>
#include <map>

#include "toprec/alg/matrix.hpp"
#include "toprec/alg/ratfunc.hpp"

namespace toprec::loopeq {

using alg::Matrix;
using alg::Poly;
using alg::Rat;
using alg::RatFunc;

/// Either the symbolic variable x or a rational point.
struct Point {
  bool symbolic = false;
  Rat value;
  static Point x() { return Point{true, Rat(0)}; }
  static Point at(const Rat& v) { return Point{false, v}; }
  friend bool operator==(const Point& a, const Point& b) {
    return a.symbolic == b.symbolic && (a.symbolic || a.value == b.value);
  }
  friend auto operator<=>(const Point& a, const Point& b) {
    if (a.symbolic != b.symbolic) return a.symbolic <=> b.symbolic;
    if (a.symbolic) return std::strong_ordering::equal;
    return a.value <=> b.value;
  }
  /// x - other as a function of x (or a constant).
  RatFunc minus(const Point& o) const;
  std::string str() const { return symbolic ? "x" : value.str(); }
};

/// x^a: a point on sheet a (0-based).
struct SheetPoint {
  Point p;
  int sheet = 0;
};

/// Gauss-Jordan inverse over Q(x); throws SingularPsiAt when det = 0.
Matrix<RatFunc> inverse(const Matrix<RatFunc>& a, RatFunc* det = nullptr);

/// hbar Psi'(x) = L(x) Psi(x) with an explicit invertible Psi over Q(x).
class PsiSystem {
 public:
  PsiSystem(Matrix<RatFunc> psi, Rat hbar);

  int d() const { return static_cast<int>(psi_.size()); }
  const Rat& hbar() const { return hbar_; }
  const Matrix<RatFunc>& psi() const { return psi_; }
  const Matrix<RatFunc>& psi_inv() const { return psi_inv_; }
  const Matrix<RatFunc>& L() const { return L_; }
  /// Psi^-1 L Psi = hbar Psi^-1 Psi'.
  const Matrix<RatFunc>& conj_L() const { return conj_L_; }
  const RatFunc& det() const { return det_; }

  /// Entries at a point; throws SingularPsiAt at a zero of det Psi or a pole.
  Matrix<RatFunc> psi_at(const Point& p) const;
  Matrix<RatFunc> psi_inv_at(const Point& p) const;
  Matrix<RatFunc> conj_L_at(const Point& p) const;
  Matrix<RatFunc> L_at(const Point& p) const;

  /// Retries the generator needed before det Psi was nonzero.
  int nonce = 0;
  std::uint64_t seed = 0;

 private:
  Matrix<RatFunc> eval(const Matrix<RatFunc>& m, const Point& p) const;

  Rat hbar_;
  Matrix<RatFunc> psi_, psi_inv_, L_, conj_L_;
  RatFunc det_;
};

/// Deterministic Psi with polynomial entries of degree <= deg and
/// coefficients in [-3, 3]; reseeds with an incremented nonce until det Psi is
/// nonzero.
PsiSystem random_system(int d, int deg, std::uint64_t seed, const Rat& hbar = Rat(1));

}  // namespace toprec::loopeq

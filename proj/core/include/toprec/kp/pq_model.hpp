#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toprec/alg/diffpoly.hpp"
#include "toprec/alg/matrix.hpp"
#include "toprec/curve/spectral_curve.hpp"

namespace toprec::kp {

using alg::DiffPoly;
using alg::Rat;
using alg::XDiff;

/// sum_j c_j(x, t) (hbar d/dt)^j, coefficient of order j at index j.
class DiffOpX {
 public:
  DiffOpX() = default;
  explicit DiffOpX(std::vector<XDiff> c);
  static DiffOpX identity();

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<XDiff>& coeffs() const { return c_; }
  XDiff coeff(int j) const;

  friend DiffOpX operator+(const DiffOpX& a, const DiffOpX& b);
  friend DiffOpX operator-(const DiffOpX& a, const DiffOpX& b);
  /// Left multiplication by a function.
  friend DiffOpX operator*(const XDiff& f, const DiffOpX& a);
  friend bool operator==(const DiffOpX& a, const DiffOpX& b) { return a.c_ == b.c_; }

  /// (hbar d/dt) composed on the left.
  DiffOpX hbar_d() const;

  std::string str() const;

 private:
  void trim();
  std::vector<XDiff> c_;
};

/// (p,q) model: Q = sum u_k (hbar d)^k, P = sum v_l (hbar d)^l with generators
/// u (and w for (4,3)) and integration constants t1, t2, ...
struct PQModel {
  int p = 0;
  int q = 0;
  std::map<std::string, Rat> constants;  // t1, t2, ...
  std::vector<DiffPoly> u;               // size q + 1 when operators are known
  std::vector<DiffPoly> v;               // size p + 1
  alg::Poly f;                           // X at u0 = 1, degree q
  alg::Poly g;                           // Y at u0 = 1, degree p
  Rat rho;
  /// Left side S(u) of the string equation S(u) = t (t_k = 0, w = 0).
  std::optional<DiffPoly> string_equation;

  bool has_operators() const { return !u.empty(); }
  /// Exponent e in t = rho tau^e.
  Rat time_exponent() const { return Rat(p + q - 1, 2); }
  /// Generators other than u that enter the operators, set to zero.
  std::vector<std::string> auxiliary_generators() const;
  std::string name() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

/// Supported families: (3,2), (2,3), (4,3), and the unitary chain (q+1, q)
/// for its spectral curve. Throws UnsupportedModel.
PQModel make_model(int p, int q, const std::map<std::string, Rat>& constants = {});

/// Spectral curve of the model at u0 = 1.
curve::SpectralCurve build_model_curve(const PQModel& m);

/// F_0 .. F_p of the folding recursion; each has order <= q - 1.
std::vector<DiffOpX> fold(const PQModel& m);

struct LaxPair {
  alg::Matrix<XDiff> L;
  alg::Matrix<XDiff> M;
};

LaxPair build_lax(const PQModel& m);

}  // namespace toprec::kp

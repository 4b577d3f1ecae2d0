#include "toprec/kp/lax.hpp"

#include <algorithm>

#include "toprec/alg/resultant.hpp"
#include "toprec/errors.hpp"

namespace toprec::kp {

using alg::BiPoly;
using alg::Matrix;

Matrix<XDiff> lax_discrepancy(const LaxPair& lp) {
  const std::size_t q = lp.L.size();
  auto ml = alg::matmul(lp.M, lp.L);
  auto lm = alg::matmul(lp.L, lp.M);
  XDiff h(DiffPoly::hbar());
  Matrix<XDiff> d(q, std::vector<XDiff>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      d[i][j] = ml[i][j] - lm[i][j] - h * lp.L[i][j].d_dt() + h * lp.M[i][j].d_dx();
  return d;
}

LaxReport verify_lax(const LaxPair& lp, const StringSeries& ss, int hbar_order, std::vector<Rat> x_samples) {
  const PQModel& m = ss.model;
  auto d = lax_discrepancy(lp);
  if (x_samples.empty()) {
    int deg = 0;
    for (const auto& row : d)
      for (const auto& e : row) deg = std::max(deg, e.degree());
    for (int i = 0; i < deg + 2; ++i) x_samples.emplace_back(i);
  }
  const int top = hbar_order + 1;
  const int order = top + 1;
  HbarSeries u = ss.as_hbar_series();
  if (u.order() < order)
    throw InsufficientOrder("string series known to hbar^" + std::to_string(u.order() - 1) + ", need hbar^" +
                            std::to_string(top));
  std::map<std::string, HbarSeries> gens{{"u", u.truncated(order)}};
  std::map<std::string, Rat> zeros;
  for (const auto& g : m.auxiliary_generators()) zeros[g] = Rat(0);
  auto dt = [&m](const PuiseuxSum& f) { return d_dt(m, f); };

  LaxReport rep;
  rep.hbar_order = hbar_order;
  rep.x_samples = x_samples;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      ++rep.entries;
      for (const auto& x : x_samples) {
        DiffPoly e = d[i][j].at_x(x).substitute_constants(zeros);
        HbarSeries s = e.substitute_series(gens, dt, order);
        for (int k = 0; k <= top; ++k) {
          ++rep.coefficients_checked;
          if (!s.coeff(k).is_zero())
            throw CompatibilityViolation("Lax equation fails at hbar^" + std::to_string(k) + ", entry (" +
                                         std::to_string(i + 1) + "," + std::to_string(j + 1) + "), x = " +
                                         x.str() + ": residual " + s.coeff(k).str());
        }
      }
    }
  return rep;
}

SpectralReport spectral_det_check(const PQModel& m) {
  LaxPair lp = build_lax(m);
  std::map<std::string, Rat> values{{"u", Rat(1)}};
  const std::size_t q = lp.L.size();
  // y - L(x) with entries as BiPolys; the determinant is computed over Q[x, y].
  Matrix<BiPoly> a(q, std::vector<BiPoly>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      a[i][j] = BiPoly() - BiPoly::from_x(lp.L[i][j].evaluate(values, Rat(0)));
      if (i == j) a[i][j] = a[i][j] + BiPoly::y();
    }
  SpectralReport r;
  r.char_poly = alg::determinant(a);
  r.resultant = alg::resultant_z(alg::minus_x(m.f), alg::minus_y(m.g));
  if (!r.char_poly.proportional_to(r.resultant, &r.ratio))
    throw CurveMismatch("det(y - L(x)) = " + r.char_poly.str() + " is not proportional to Res_z = " +
                        r.resultant.str());
  return r;
}

}  // namespace toprec::kp

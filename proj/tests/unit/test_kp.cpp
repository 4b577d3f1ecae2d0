#include "doctest.h"
#include "reference.hpp"
#include "toprec/alg/parser.hpp"
#include "toprec/errors.hpp"
#include "toprec/kp/chebyshev.hpp"
#include "toprec/kp/free_energy.hpp"
#include "toprec/kp/lax.hpp"

using namespace toprec;
using namespace toprec::kp;
using alg::parse_poly;
using alg::parse_xdiff;
using alg::Poly;

namespace {

alg::Matrix<XDiff> parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  alg::Matrix<XDiff> m;
  for (const auto& r : rows) {
    std::vector<XDiff> row;
    for (const auto& e : r) row.push_back(parse_xdiff(e));
    m.push_back(row);
  }
  return m;
}

alg::Matrix<XDiff> without(const alg::Matrix<XDiff>& m, const std::string& gen) {
  alg::Matrix<XDiff> r = m;
  for (auto& row : r)
    for (auto& e : row) {
      std::vector<DiffPoly> c;
      for (const auto& k : e.coeffs()) c.push_back(k.substitute_constants({{gen, Rat(0)}}));
      e = XDiff(c);
    }
  return r;
}

}  // namespace

TEST_CASE("chebyshev: values and composition") {
  CHECK(chebyshev(0) == Poly(2));
  CHECK(chebyshev(2) == parse_poly("z^2-2"));
  CHECK(chebyshev(3) == parse_poly("z^3-3*z"));
  CHECK(chebyshev(4) == parse_poly("z^4-4*z^2+2"));
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) CHECK(chebyshev(m).compose(chebyshev(n)) == chebyshev(m * n));
}

TEST_CASE("validate_pair") {
  CHECK(validate_pair(chebyshev(2), chebyshev(3), 3, 2) == Rat(3));
  CHECK(validate_pair(chebyshev(3), chebyshev(4), 4, 3) == Rat(4));
  CHECK_THROWS_AS(validate_pair(parse_poly("z^2"), parse_poly("z^3+z"), 3, 2), NotHomogeneousPair);
  CHECK_THROWS_AS(validate_pair(chebyshev(2), chebyshev(3), 2, 2), NotHomogeneousPair);
}

TEST_CASE("make_model: supported families") {
  CHECK(make_model(3, 2).rho == Rat(3));
  CHECK(make_model(2, 3).rho == Rat(3));
  CHECK(make_model(4, 3).rho == Rat(4));
  auto unitary = make_model(5, 4);
  CHECK_FALSE(unitary.has_operators());
  CHECK(unitary.f == chebyshev(4));
  // X' = 4z(z^2 - 2): the unitary chain past (4,3) leaves the rational setting.
  CHECK_THROWS_AS(build_model_curve(unitary), RamificationNotRational);
  CHECK_THROWS_AS(make_model(5, 2), UnsupportedModel);
  CHECK_THROWS_AS(make_model(3, 2, {{"x", Rat(1)}}), UnsupportedModel);
}

TEST_CASE("folding operators for pure gravity") {
  auto f = fold(make_model(3, 2));
  REQUIRE(f.size() == 4);
  CHECK(f[1] == DiffOpX({XDiff(0), XDiff(1)}));
  CHECK(f[2] == DiffOpX({parse_xdiff("x+2*u")}));
  CHECK(f[3] == DiffOpX({parse_xdiff("2*hbar*u'"), parse_xdiff("x+2*u")}));
  for (const auto& op : fold(make_model(4, 3))) CHECK(op.order() <= 2);
}

TEST_CASE("pure gravity Lax pair at several t1") {
  for (Rat t1 : {Rat(0), Rat(5, 7)}) {
    auto lp = build_lax(make_model(3, 2, {{"t1", t1}}));
    std::string c = t1.str();
    CHECK(lp.L == parse_matrix({{"-1/2*hbar*u' - " + c, "-x+u"},
                                {"-(x-u)*(x+2*u) - 1/2*hbar^2*u''", "1/2*hbar*u' - " + c}}));
    CHECK(lp.M == parse_matrix({{"0", "1"}, {"x+2*u", "0"}}));
  }
}

TEST_CASE("Ising Lax matrix at vanishing constants is minus the expected reduced form") {
  auto lp = build_lax(make_model(4, 3));
  auto shown = parse_matrix({
      {"2*u^2 - 1/6*hbar^2*u''", "x + 1/2*hbar*u'", "-u"},
      {"-u*x + 5/2*hbar*u*u' - 1/6*hbar^3*u'''", "-u^2 + 1/3*hbar^2*u''", "x - 1/2*hbar*u'"},
      {"x^2 + hbar^2*(7/4*u'^2 + 5/2*u*u'') - 1/6*hbar^4*u''''", "2*u*x - hbar*u*u' + 1/6*hbar^3*u'''",
       "-u^2 - 1/6*hbar^2*u''"},
  });
  auto L = without(lp.L, "w");
  CHECK_FALSE(L == shown);
  for (auto& row : shown)
    for (auto& e : row) e = -e;
  CHECK(L == shown);
}

TEST_CASE("string series") {
  auto s = string_series(make_model(3, 2), 3);
  CHECK(s.orders[0] == PuiseuxSum::monomial(Rat(1), Rat(1)));
  CHECK(s.orders[1] == PuiseuxSum::monomial(Rat(-1, 432), Rat(-4)));
  CHECK(s.orders[2] == PuiseuxSum::monomial(Rat(-49, 373248), Rat(-9)));
  CHECK(s.orders[3] == PuiseuxSum::monomial(Rat(-1225, 40310784), Rat(-14)));
  auto h = s.as_hbar_series();
  CHECK(h.order() == 8);
  for (int k = 1; k < 8; k += 2) CHECK(h.coeff(k).is_zero());
  CHECK_THROWS_AS(h.coeff(8), InsufficientOrder);
  CHECK_THROWS(string_series(make_model(3, 2, {{"t1", Rat(1)}}), 2));
  auto i = string_series(make_model(4, 3), 2);
  CHECK(i.orders[1] == PuiseuxSum::monomial(Rat(-1, 384), Rat(-6)));
}

TEST_CASE("free energies and the tau cross-check") {
  auto m = make_model(3, 2);
  tr::CorrelatorTable t(build_model_curve(m));
  auto fe = free_energy_table(m, t, 2);
  CHECK(fe.F.at(0) == PuiseuxSum::monomial(Rat(12, 5), Rat(5)));
  CHECK(fe.F.at(1) == PuiseuxSum::log(Rat(1, 24)));
  CHECK(fe.F.at(2) == ref::to_tau({Rat(-7, 640), {{3, Rat(-3, 2)}}, Rat(1), Rat(-5, 2)}, m.rho, m.time_exponent()));
  auto ss = string_series(m, 2);
  CHECK(tau_crosscheck(m, fe, ss, 2).g_checked == 3);
  auto bad = fe;
  bad.F[2] = bad.F[2] * Rat(2);
  CHECK_THROWS_AS(tau_crosscheck(m, bad, ss, 2), TauMismatch);

  auto d = make_model(2, 3);
  tr::CorrelatorTable td(build_model_curve(d));
  auto fd = free_energy_table(d, td, 2);
  CHECK(fd.F.at(1) == fe.F.at(1));
  CHECK(fd.F.at(2) == fe.F.at(2));
}

TEST_CASE("verify_lax: solutions pass, perturbed series fail") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}}) {
    auto m = make_model(p, q);
    auto lp = build_lax(m);
    auto ss = string_series(m, 1);
    auto rep = verify_lax(lp, ss, 2);
    CHECK(rep.coefficients_checked > 0);
    auto bad = ss;
    bad.orders[1] += PuiseuxSum(1);
    CHECK_THROWS_AS(verify_lax(lp, bad, 2), CompatibilityViolation);
    CHECK_THROWS_AS(verify_lax(lp, string_series(m, 0), 2), InsufficientOrder);
  }
}

TEST_CASE("spectral determinant against the resultant") {
  auto r = spectral_det_check(make_model(3, 2));
  CHECK(r.ratio == Rat(1));
  CHECK(spectral_det_check(make_model(2, 3)).ratio == Rat(-1));
  // The folded Ising L has det(y - L) = x^4 + y^3 - 4x^2 - 3y + 2, the curve with Y -> -Y.
  CHECK_THROWS_AS(spectral_det_check(make_model(4, 3)), CurveMismatch);
}

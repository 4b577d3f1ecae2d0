#include "doctest.h"
#include "toprec/alg/parser.hpp"
#include "toprec/errors.hpp"
#include "toprec/loopeq/checks.hpp"
#include "toprec/loopeq/correlators.hpp"

using namespace toprec;
using namespace toprec::loopeq;
using alg::parse_poly;

namespace {

Poly xpoly(const char* s) { return parse_poly(s, "x"); }

PsiSystem scalar(const char* psi) { return PsiSystem({{RatFunc(xpoly(psi))}}, Rat(1)); }

SheetPoint at(const Rat& v, int sheet) { return SheetPoint{Point::at(v), sheet}; }
SheetPoint xs(int sheet) { return SheetPoint{Point::x(), sheet}; }

}  // namespace

TEST_CASE("d = 1: kernel and one-point function") {
  auto sys = scalar("x");
  Correlators c(sys);
  CHECK(c.kernel(Point::at(2), Point::at(1))[0][0] == RatFunc(Rat(1, 2)));
  // W_1 = -hbar^-1 Psi'/Psi.
  CHECK(c.W({xs(0)}) == -RatFunc(Poly(1).with_var("x"), xpoly("x")));
  CHECK_THROWS_AS(c.kernel(Point::at(0), Point::at(1)), SingularPsiAt);
  CHECK_THROWS(c.kernel(Point::at(1), Point::at(1)));
}

TEST_CASE("d = 1: quadratic combination vanishes, anticommutator P3 does not") {
  auto sys = scalar("3");
  CHECK(check_quadratic(sys, 1, {}).pass);
  CHECK(check_quadratic(sys, 3, {at(2, 0), at(5, 0)}).pass);
  CHECK(quadratic_rhs(sys, at(2, 0), at(5, 0)).is_zero());
  RatFunc variant = quadratic_rhs(sys, at(2, 0), at(5, 0), true);
  CHECK_FALSE(variant.is_zero());
  CHECK_THROWS_AS(check_p3_anticommutator(sys, at(2, 0), at(5, 0)), IdentityViolation);
}

TEST_CASE("random_system: determinism and shape") {
  auto a = random_system(2, 1, 42);
  auto b = random_system(2, 1, 42);
  CHECK(a.psi() == b.psi());
  CHECK_FALSE(random_system(2, 1, 43).psi() == a.psi());
  auto c = random_system(1, 0, 99);
  CHECK(c.psi()[0][0].is_polynomial());
  CHECK(c.psi()[0][0].num().degree() == 0);
  CHECK(c.L()[0][0].is_zero());
  auto s = random_system(3, 2, 7);
  CHECK_FALSE(s.det().is_zero());
  CHECK(s.det().num().degree() <= 6);
  for (const auto& row : s.psi())
    for (const auto& e : row) CHECK(e.num().degree() <= 2);
}

TEST_CASE("kernel diagonal and replication on a seeded system") {
  auto sys = random_system(2, 1, 42);
  auto pts = regular_points(sys, 3);
  CHECK(check_replication(sys, pts[0], pts[1], pts[2]).pass);
  // (x1 - x2) K(x1, x2) -> identity as x1 -> x2.
  Correlators c(sys);
  auto k = c.kernel(Point::x(), Point::at(pts[0]));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      RatFunc v = k[a][b] * Point::x().minus(Point::at(pts[0]));
      CHECK(v.eval(pts[0]) == Rat(a == b ? 1 : 0));
    }
}

TEST_CASE("W_2 equals minus the kernel product") {
  auto sys = random_system(3, 1, 5);
  Correlators c(sys);
  auto pts = regular_points(sys, 2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      auto k12 = c.kernel(Point::at(pts[0]), Point::at(pts[1]));
      auto k21 = c.kernel(Point::at(pts[1]), Point::at(pts[0]));
      CHECK(c.W({at(pts[0], a), at(pts[1], b)}) == -(k12[a][b] * k21[b][a]));
    }
}

TEST_CASE("one-point function is minus the conjugated L") {
  auto sys = random_system(2, 2, 9);
  Correlators c(sys);
  for (int a = 0; a < 2; ++a) CHECK(c.W({xs(a)}) * RatFunc(sys.hbar()) == -sys.conj_L()[a][a]);
}

TEST_CASE("loop equations on seeded systems") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    int d = 1 + static_cast<int>(seed % 3);
    auto sys = random_system(d, static_cast<int>(seed % 3), seed);
    CAPTURE(d);
    CAPTURE(seed);
    auto pts = regular_points(sys, 3);
    CHECK(check_linear(sys, 1, {}).pass);
    CHECK(check_linear(sys, 2, {at(pts[0], 0)}).pass);
    CHECK(check_linear(sys, 3, {at(pts[0], 0), at(pts[1], d - 1)}).pass);
    CHECK(check_quadratic(sys, 1, {}).pass);
    CHECK(check_quadratic(sys, 2, {at(pts[0], d - 1)}).pass);
    CHECK(check_quadratic(sys, 3, {at(pts[0], 0), at(pts[1], d - 1)}).pass);
    CHECK(check_spectral_identity(sys, pts[2]).pass);
    CHECK(check_symmetry(sys, {at(pts[0], 0), at(pts[1], d - 1), at(pts[2], 0)}).pass);
    CHECK(check_w3_regular(sys, 0, at(pts[0], d - 1), at(pts[1], 0)).pass);
  }
}

TEST_CASE("loop equations at hbar != 1") {
  auto sys = random_system(2, 1, 5, Rat(2, 3));
  auto one = random_system(2, 1, 5);
  REQUIRE(sys.psi() == one.psi());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(sys.L()[a][b] == one.L()[a][b] * RatFunc(Rat(2, 3)));
  auto rep = run_suite(sys);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("gauge transformations") {
  auto sys = random_system(3, 1, 21);
  Matrix<Rat> perm{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK(check_gauge_constant(sys, perm).pass);
  Matrix<Rat> id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(check_gauge_constant(sys, id).pass);
  auto s = check_gauge_scalar(sys, RatFunc(xpoly("x^2+1")));
  CHECK(s.report.pass);
  CHECK(s.w1_shift_exact);
  CHECK_FALSE(s.w1_invariant);
  Matrix<Rat> singular{{1, 0, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK_THROWS(check_gauge_constant(sys, singular));
}

TEST_CASE("pole containment") {
  RatFunc f(xpoly("1"), xpoly("(x-1)^2*(x+2)"));
  CHECK_NOTHROW(require_poles_within(f, {xpoly("x-1"), xpoly("x+2")}, "f"));
  CHECK_THROWS_AS(require_poles_within(f, {xpoly("x-1")}, "f"), UnexpectedPole);
}

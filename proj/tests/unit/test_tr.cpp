#include "doctest.h"
#include "reference.hpp"
#include "toprec/alg/parser.hpp"
#include "toprec/errors.hpp"
#include "toprec/tr/correlator_table.hpp"

using namespace toprec;
using alg::parse_poly;
using alg::Rat;
using tr::Pole;

namespace {

curve::SpectralCurve gravity() { return curve::build_curve(parse_poly("z^2-2"), parse_poly("z^3-3*z")); }
curve::SpectralCurve dual() { return curve::build_curve(parse_poly("z^3-3*z"), parse_poly("2-z^2")); }
curve::SpectralCurve ising() { return curve::build_curve(parse_poly("z^3-3*z"), parse_poly("z^4-4*z^2+2")); }

}  // namespace

TEST_CASE("pure gravity correlators in closed form") {
  tr::CorrelatorTable t(gravity());
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}}) {
    CAPTURE(g);
    CAPTURE(n);
    CHECK(t.omega(g, n) == ref::pure_gravity(g, n));
  }
}

TEST_CASE("one-point forms of the dual and Ising curves") {
  tr::CorrelatorTable d(dual());
  CHECK(d.omega(0, 3) == ref::dual_w03());
  CHECK(ref::one_point(d.omega(1, 1)) == ref::dual_w11());
  tr::CorrelatorTable i(ising());
  CHECK(ref::one_point(i.omega(1, 1)) == ref::ising_w11());
  CHECK(ref::one_point(i.omega(2, 1)) == ref::ising_w21());
}

TEST_CASE("tensor forms: symmetry enforced and evaluation") {
  std::map<tr::PoleTuple, Rat> bad{{{Pole{Rat(0), 2}, Pole{Rat(0), 4}}, Rat(1)}};
  CHECK_THROWS_AS(tr::TensorForm::from_ordered(0, 2, bad), IdentityViolation);
  auto w = ref::pure_gravity(1, 1);
  CHECK(w.evaluate({Rat(1)}) == Rat(-1, 144) + Rat(-3, 144));
  CHECK_THROWS_AS(w.evaluate({Rat(0)}), EvalAtPole);
  auto w3 = ref::pure_gravity(0, 3);
  CHECK(w3.evaluate({Rat(1), Rat(2), Rat(-1)}) == Rat(-1, 6) / Rat(4));
  CHECK(w3.max_pole_order() == 2);
}

TEST_CASE("check_form rejects a form without local antisymmetry") {
  tr::CorrelatorTable t(gravity());
  // dz/z^2 is odd under z -> -z, dz/z^3 is not.
  CHECK_NOTHROW(t.check_form(ref::form(1, 1, {{ref::at0({2}), Rat(1)}}), 12));
  CHECK_THROWS_AS(t.check_form(ref::form(1, 1, {{ref::at0({3}), Rat(1)}}), 12), IdentityViolation);
  CHECK_NOTHROW(t.check_form(t.omega(1, 2), 16));
}

TEST_CASE("results do not depend on truncation order or thread count") {
  tr::TruncationPolicy lo;
  lo.base_extra = 4;
  lo.threads = 1;
  tr::TruncationPolicy hi;
  hi.base_extra = 12;
  hi.threads = 3;
  tr::CorrelatorTable a(ising(), lo), b(ising(), hi);
  CHECK(a.omega(1, 1) == b.omega(1, 1));
  CHECK(a.omega(0, 4) == b.omega(0, 4));
  CHECK(a.omega(1, 2) == b.omega(1, 2));
}

TEST_CASE("unstable range is refused") {
  tr::CorrelatorTable t(gravity());
  CHECK_THROWS(t.omega(0, 2));
  CHECK_THROWS(t.omega(0, 1));
}

#include "doctest.h"
#include "toprec/alg/parser.hpp"
#include "toprec/curve/spectral_curve.hpp"
#include "toprec/errors.hpp"

using namespace toprec;
using alg::parse_poly;
using alg::Rat;
using alg::Series;

TEST_CASE("build_curve: pure gravity and duals") {
  auto c = curve::build_curve(parse_poly("z^2-2"), parse_poly("z^3-3*z"));
  REQUIRE(c.ramification.size() == 1);
  CHECK(c.ramification[0] == Rat(0));
  auto d = curve::build_curve(parse_poly("z^3-3*z"), parse_poly("2-z^2"));
  REQUIRE(d.ramification.size() == 2);
  CHECK(d.ramification[0] == Rat(-1));
  CHECK(d.ramification[1] == Rat(1));
}

TEST_CASE("build_curve: rejected inputs") {
  CHECK_THROWS_AS(curve::build_curve(parse_poly("z"), parse_poly("z^2")), NotRegular);
  CHECK_THROWS_AS(curve::build_curve(parse_poly("z^2"), parse_poly("z^2")), NotRegular);
  CHECK_THROWS_AS(curve::build_curve(parse_poly("z^3-2*z"), parse_poly("z^2")), RamificationNotRational);
  CHECK_THROWS_AS(curve::build_curve(parse_poly("z^3"), parse_poly("z")), RamificationNotSimple);
}

TEST_CASE("galois involution is an involution preserving X") {
  auto c = curve::build_curve(parse_poly("z^3-3*z"), parse_poly("z^4-4*z^2+2"));
  for (const auto& r : c.ramification) {
    auto rp = curve::galois_series(c, r, 12);
    CHECK(rp.s.coefficient(1) == Rat(-1));
    Series t = Series::exact({Rat(1)}, 1);
    Series ss = rp.s.compose(rp.s, 12);
    for (int k = 0; k < 12; ++k) CHECK(ss.coefficient(k) == t.coefficient(k));
  }
  // X = z^2 - 2 is even: the involution is exactly z -> -z.
  auto g = curve::build_curve(parse_poly("z^2-2"), parse_poly("z^3-3*z"));
  auto rp = curve::galois_series(g, Rat(0), 10);
  CHECK(rp.s.coefficient(1) == Rat(-1));
  for (int k = 2; k < 10; ++k) CHECK(rp.s.coefficient(k).is_zero());
}

TEST_CASE("omega01 coefficient") {
  auto c = curve::build_curve(parse_poly("z^3-3*z"), parse_poly("2-z^2"));
  CHECK(curve::omega01_as_ratfunc(c) == alg::RatFunc(parse_poly("3*(z^2-2)*(z^2-1)")));
}

TEST_CASE("double point scan") {
  // Y^2 = (X+2)(X-1)^2: the node sits at z = +-sqrt(3).
  auto s = curve::double_point_scan(parse_poly("z^2-2"), parse_poly("z^3-3*z"));
  CHECK_FALSE(s.degenerate);
  CHECK(s.rational_pairs.empty());
  CHECK(s.has_irrational);
  // X = z^2 - 1, Y = z^3 - z meet at z = -1, 1.
  auto n = curve::double_point_scan(parse_poly("z^2-1"), parse_poly("z^3-z"));
  REQUIRE(n.rational_pairs.size() == 1);
  CHECK(n.rational_pairs[0] == std::pair<Rat, Rat>{Rat(-1), Rat(1)});
  // Both factor through z^2.
  auto deg = curve::double_point_scan(parse_poly("z^4-z^2"), parse_poly("z^2"));
  CHECK(deg.degenerate);
}

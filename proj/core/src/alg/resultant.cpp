#include "toprec/alg/resultant.hpp"

#include "toprec/alg/matrix.hpp"
#include "toprec/errors.hpp"

namespace toprec::alg {

namespace {
ZPoly trimmed(ZPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}
}  // namespace

BiPoly resultant_z(const ZPoly& p, const ZPoly& q) {
  ZPoly a = trimmed(p), b = trimmed(q);
  if (a.empty() || b.empty()) throw DivisionByZero("resultant of a zero polynomial");
  return resultant(a, b);
}

Rat resultant(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw DivisionByZero("resultant of a zero polynomial");
  return resultant(p.coeffs(), q.coeffs());
}

ZPoly minus_x(const Poly& X) {
  ZPoly r;
  for (const auto& c : X.coeffs()) r.emplace_back(c);
  if (r.empty()) r.emplace_back();
  r[0] -= BiPoly::x();
  return r;
}

ZPoly minus_y(const Poly& Y) {
  ZPoly r;
  for (const auto& c : Y.coeffs()) r.emplace_back(c);
  if (r.empty()) r.emplace_back();
  r[0] -= BiPoly::y();
  return r;
}

}  // namespace toprec::alg

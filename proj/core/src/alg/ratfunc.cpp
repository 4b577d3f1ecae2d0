#include "toprec/alg/ratfunc.hpp"

#include <limits>

#include "toprec/errors.hpp"

namespace toprec::alg {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  std::string v = var();
  if (num_.is_zero()) {
    num_ = Poly(std::vector<Rat>{}, v);
    den_ = Poly(std::vector<Rat>{Rat(1)}, v);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divrem(g).first;
    den_ = den_.divrem(g).first;
  }
  Rat l = den_.lead();
  if (!l.is_one()) {
    Rat inv = l.inverse();
    num_ *= inv;
    den_ *= inv;
  }
  num_ = num_.with_var(v);
  den_ = den_.with_var(v);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(Poly(std::vector<Rat>{}, a.var()));
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFunc::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d.is_zero()) throw EvalAtPole("rational function " + str() + " at " + x.str());
  return num_.eval(x) / d;
}

Rat RatFunc::residue_at(const Rat& a) const {
  // Write den = (z-a)^m d1, shift to t = z - a, expand num/d1 to order m-1.
  Poly lin(std::vector<Rat>{-a, Rat(1)}, den_.var());
  Poly d1 = den_;
  int m = 0;
  while (d1.degree() > 0 && d1.eval(a).is_zero()) {
    d1 = d1.divrem(lin).first;
    ++m;
  }
  if (m == 0) return Rat(0);
  Poly n = num_.shift(a), d = d1.shift(a);
  // Series quotient coefficients q_0..q_{m-1} of n/d.
  std::vector<Rat> q(static_cast<std::size_t>(m));
  Rat inv = d.coeff(0).inverse();
  for (int k = 0; k < m; ++k) {
    Rat acc = n.coeff(k);
    for (int j = 1; j <= k; ++j) acc -= d.coeff(j) * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc * inv;
  }
  return q.back();
}

Rat RatFunc::residue_at_infinity() const {
  Poly r = num_.divrem(den_).second;
  if (r.is_zero() || r.degree() != den_.degree() - 1) return Rat(0);
  return -(r.lead() / den_.lead());
}

int RatFunc::order_at_infinity() const {
  if (is_zero()) return std::numeric_limits<int>::max();
  return den_.degree() - num_.degree();
}

namespace {
std::string paren(const Poly& p) {
  int terms = 0;
  for (const auto& c : p.coeffs()) terms += c.is_zero() ? 0 : 1;
  return terms > 1 ? "(" + p.str() + ")" : p.str();
}
}  // namespace

std::string RatFunc::str() const {
  if (is_zero()) return "0";
  Rat c = num_.lead();
  Poly m = num_.monic();
  std::string body;
  if (m.degree() == 0) body = c.str();
  else if (c.is_one()) body = paren(m);
  else body = c.str() + " * " + paren(m);
  if (den_.degree() > 0) body += " / " + paren(den_);
  return body;
}

}  // namespace toprec::alg

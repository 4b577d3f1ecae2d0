#include "toprec/alg/poly.hpp"

#include <algorithm>

#include "toprec/errors.hpp"

namespace toprec::alg {

namespace {
const Rat kZero{};
}

Poly::Poly(const Rat& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

Poly Poly::monomial(const Rat& c, int degree, std::string var) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v), std::move(var));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_var(const Poly& o) const {
  if (var_ != o.var_ && !is_constant() && !o.is_constant())
    throw VariableMismatch("polynomials in '" + var_ + "' and '" + o.var_ + "'");
}

const Rat& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const Rat& Poly::lead() const { return c_.empty() ? kZero : c_.back(); }

Poly Poly::with_var(std::string var) const {
  Poly r = *this;
  r.var_ = std::move(var);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_var(o);
  if (is_constant()) var_ = o.var_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_var(o);
  if (is_constant()) var_ = o.var_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  check_var(o);
  if (is_constant()) var_ = o.var_;
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  check_var(d);
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::string v = is_constant() ? d.var_ : var_;
  std::vector<Rat> rem = c_;
  int dd = d.degree();
  int qd = degree() - dd;
  if (qd < 0) return {Poly(std::vector<Rat>{}, v), Poly(rem, v)};
  std::vector<Rat> q(static_cast<std::size_t>(qd) + 1);
  Rat inv = d.lead().inverse();
  for (int k = qd; k >= 0; --k) {
    Rat c = rem[static_cast<std::size_t>(k + dd)] * inv;
    q[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * d.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(q), v), Poly(std::move(rem), v)};
}

Poly Poly::derivative() const {
  std::vector<Rat> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rat(static_cast<long>(i)));
  return Poly(std::move(r), var_);
}

Rat Poly::eval(const Rat& x) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc(std::vector<Rat>{}, inner.var_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it);
  return acc.with_var(inner.is_constant() ? var_ : inner.var_);
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly(Rat(1)).with_var(var_);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::shift(const Rat& a) const {
  // Taylor shift by repeated synthetic division.
  std::vector<Rat> c = c_;
  int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i)
    for (int j = n - 2; j >= i; --j) c[static_cast<std::size_t>(j)] += a * c[static_cast<std::size_t>(j + 1)];
  return Poly(std::move(c), var_);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rat a = c.abs();
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    std::string mono = i == 0 ? "" : (i == 1 ? var_ : var_ + "^" + std::to_string(i));
    if (i == 0) out += a.str();
    else if (a.is_one()) out += mono;
    else out += a.str() + "*" + mono;
  }
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divrem(y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

RationalRoots rational_roots(const Poly& p) {
  if (p.is_zero()) throw DivisionByZero("rational_roots of the zero polynomial");
  RationalRoots out;
  Poly rest = p;
  // Root at zero first.
  int zero_mult = 0;
  while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
    rest = rest.divrem(Poly::variable(p.var())).first;
    ++zero_mult;
  }
  std::vector<std::pair<Rat, int>> found;
  if (zero_mult) found.emplace_back(Rat(0), zero_mult);
  if (rest.degree() > 0) {
    // Clear denominators to get an integer polynomial with the same roots.
    mpz_class l = 1;
    for (const auto& c : rest.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
    mpz_class a0 = (rest.coeff(0) * Rat(l)).numerator();
    mpz_class an = (rest.lead() * Rat(l)).numerator();
    auto ps = positive_divisors(a0);
    auto qs = positive_divisors(an);
    std::vector<Rat> candidates;
    for (const auto& pp : ps)
      for (const auto& qq : qs) {
        candidates.emplace_back(pp, qq);
        candidates.emplace_back(mpz_class(-pp), qq);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      Poly lin(std::vector<Rat>{-r, Rat(1)}, p.var());
      while (rest.degree() > 0 && rest.eval(r).is_zero()) {
        rest = rest.divrem(lin).first;
        ++mult;
      }
      if (mult) found.emplace_back(r, mult);
    }
  }
  std::sort(found.begin(), found.end());
  out.roots = std::move(found);
  out.cofactor = rest;
  return out;
}

}  // namespace toprec::alg

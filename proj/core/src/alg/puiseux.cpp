#include "toprec/alg/puiseux.hpp"

#include "toprec/errors.hpp"

namespace toprec::alg {

PuiseuxSum::PuiseuxSum(const Rat& c) { put(Rat(0), c); }

PuiseuxSum PuiseuxSum::monomial(const Rat& c, const Rat& exponent) {
  PuiseuxSum s;
  s.put(exponent, c);
  return s;
}

PuiseuxSum PuiseuxSum::log(const Rat& c) {
  PuiseuxSum s;
  if (!c.is_zero()) s.log_ = c;
  return s;
}

void PuiseuxSum::put(const Rat& a, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat PuiseuxSum::coeff(const Rat& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rat(0) : it->second;
}

PuiseuxSum PuiseuxSum::operator-() const {
  PuiseuxSum r;
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
  if (log_) r.log_ = -*log_;
  return r;
}

PuiseuxSum& PuiseuxSum::operator+=(const PuiseuxSum& o) {
  for (const auto& [a, c] : o.terms_) put(a, c);
  if (o.log_) {
    Rat l = (log_ ? *log_ : Rat(0)) + *o.log_;
    if (l.is_zero()) log_.reset();
    else log_ = l;
  }
  return *this;
}

PuiseuxSum operator*(const PuiseuxSum& a, const PuiseuxSum& b) {
  if (a.log_ || b.log_) {
    if (a.is_zero() || b.is_zero()) return PuiseuxSum();
    throw UnsupportedOperation("product of Puiseux sums with a log term");
  }
  PuiseuxSum r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.put(ea + eb, ca * cb);
  return r;
}

PuiseuxSum operator*(PuiseuxSum a, const Rat& s) {
  if (s.is_zero()) return PuiseuxSum();
  for (auto& [e, c] : a.terms_) c *= s;
  if (a.log_) *a.log_ *= s;
  return a;
}

PuiseuxSum PuiseuxSum::derivative() const {
  PuiseuxSum r;
  for (const auto& [a, c] : terms_) r.put(a - Rat(1), a * c);
  if (log_) r.put(Rat(-1), *log_);
  return r;
}

PuiseuxSum PuiseuxSum::antiderivative() const {
  if (log_) throw UnsupportedOperation("antiderivative of a log term");
  PuiseuxSum r;
  for (const auto& [a, c] : terms_) {
    if (a == Rat(-1)) r.log_ = c;
    else r.put(a + Rat(1), c / (a + Rat(1)));
  }
  return r;
}

PuiseuxSum PuiseuxSum::divide_by_monomial(const Rat& c, const Rat& exponent) const {
  if (c.is_zero()) throw DivisionByZero("division by the zero monomial");
  return multiply_by_monomial(c.inverse(), -exponent);
}

PuiseuxSum PuiseuxSum::multiply_by_monomial(const Rat& c, const Rat& exponent) const {
  if (log_ && !(exponent.is_zero())) throw UnsupportedOperation("log term times a power of tau");
  PuiseuxSum r;
  for (const auto& [a, k] : terms_) r.put(a + exponent, k * c);
  if (log_ && !c.is_zero()) r.log_ = *log_ * c;
  return r;
}

PuiseuxSum PuiseuxSum::pow(unsigned e) const {
  PuiseuxSum r(Rat(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string PuiseuxSum::str(const std::string& var) const {
  std::string out;
  auto append = [&](const Rat& c, const std::string& mono) {
    bool neg = c.sign() < 0;
    Rat a = c.abs();
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    if (mono.empty()) out += a.str();
    else if (a.is_one()) out += mono;
    else out += a.str() + "*" + mono;
  };
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rat& e = it->first;
    std::string mono;
    if (e.is_one()) mono = var;
    else if (!e.is_zero()) mono = var + "^" + (e.is_integer() ? e.str() : "(" + e.str() + ")");
    append(it->second, mono);
  }
  if (log_) append(*log_, "ln(" + var + ")");
  return out.empty() ? "0" : out;
}

HbarSeries::HbarSeries(std::vector<PuiseuxSum> coeffs, int order) : c_(std::move(coeffs)), order_(order) {
  c_.resize(static_cast<std::size_t>(order_));
}

HbarSeries HbarSeries::constant(const PuiseuxSum& c, int order) {
  std::vector<PuiseuxSum> v(static_cast<std::size_t>(order));
  if (order > 0) v[0] = c;
  return HbarSeries(std::move(v), order);
}

const PuiseuxSum& HbarSeries::coeff(int k) const {
  if (k < 0 || k >= order_)
    throw InsufficientOrder("hbar^" + std::to_string(k) + " requested, series known to order " +
                            std::to_string(order_));
  return c_[static_cast<std::size_t>(k)];
}

HbarSeries HbarSeries::truncated(int order) const {
  if (order > order_) throw InsufficientOrder("cannot extend an hbar series from order " + std::to_string(order_));
  return HbarSeries(std::vector<PuiseuxSum>(c_.begin(), c_.begin() + order), order);
}

HbarSeries operator+(const HbarSeries& a, const HbarSeries& b) {
  int n = std::min(a.order_, b.order_);
  std::vector<PuiseuxSum> c(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = a.c_[static_cast<std::size_t>(k)] + b.c_[static_cast<std::size_t>(k)];
  return HbarSeries(std::move(c), n);
}

HbarSeries operator-(const HbarSeries& a, const HbarSeries& b) { return a + b.shifted(0, Rat(-1)); }

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
  int n = std::min(a.order_, b.order_);
  std::vector<PuiseuxSum> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j < n; ++j)
      c[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
  }
  return HbarSeries(std::move(c), n);
}

HbarSeries HbarSeries::shifted(int k, const Rat& c) const {
  std::vector<PuiseuxSum> out(static_cast<std::size_t>(order_));
  for (int i = 0; i + k < order_; ++i) out[static_cast<std::size_t>(i + k)] = c_[static_cast<std::size_t>(i)] * c;
  return HbarSeries(std::move(out), order_);
}

}  // namespace toprec::alg

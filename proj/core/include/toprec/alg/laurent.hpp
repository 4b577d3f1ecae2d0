#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "toprec/alg/poly.hpp"
#include "toprec/alg/rat.hpp"
#include "toprec/errors.hpp"

namespace toprec::alg {

/// Expansion point: a rational number, or infinity (local variable 1/z).
struct Center {
  std::optional<Rat> at;  // empty means infinity
  static Center finite(const Rat& r) { return Center{r}; }
  static Center infinity() { return Center{}; }
  bool is_infinite() const { return !at.has_value(); }
  friend bool operator==(const Center& a, const Center& b) { return a.at == b.at; }
};

/// Truncated Laurent series sum_k c_k t^k in a local variable t.
///
/// Coefficients are known for exponents in [valuation, order); order() is the
/// absolute truncation order (the series is known modulo t^order). An exact
/// series (a Laurent polynomial) carries order kExact. Reading a coefficient
/// at or beyond order() throws TruncationExhausted, never returns zero.
template <class K>
class LaurentSeries {
 public:
  static constexpr int kExact = 1 << 28;

  LaurentSeries() = default;

  /// Exact Laurent polynomial t^val * (c[0] + c[1] t + ...).
  static LaurentSeries exact(std::vector<K> c, int val = 0, Center center = Center::finite(Rat(0))) {
    LaurentSeries s;
    s.center_ = center;
    s.val_ = val;
    s.c_ = std::move(c);
    s.order_ = kExact;
    s.normalize();
    return s;
  }
  /// Series known modulo t^order.
  static LaurentSeries truncated(std::vector<K> c, int val, int order,
                                 Center center = Center::finite(Rat(0))) {
    LaurentSeries s;
    s.center_ = center;
    s.val_ = val;
    s.c_ = std::move(c);
    s.order_ = order;
    s.normalize();
    return s;
  }
  /// O(t^order): nothing known below order except that it is zero.
  static LaurentSeries big_o(int order, Center center = Center::finite(Rat(0))) {
    return truncated({}, order, order, center);
  }
  static LaurentSeries monomial(const K& c, int k, Center center = Center::finite(Rat(0))) {
    return exact({c}, k, center);
  }
  /// Expansion of a polynomial p(r + t) around t = 0 (exact).
  static LaurentSeries from_poly(const Poly& p, const Rat& r) {
    Poly s = p.shift(r);
    std::vector<K> c;
    for (const auto& a : s.coeffs()) c.emplace_back(a);
    return exact(std::move(c), 0, Center::finite(r));
  }

  const Center& center() const { return center_; }
  /// Lowest exponent with a nonzero coefficient, or order() if none is known.
  int valuation() const { return val_; }
  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  /// True when every known coefficient vanishes.
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of t^k; throws TruncationExhausted when k >= order().
  K coefficient(int k) const {
    if (k >= order_)
      throw TruncationExhausted("coefficient t^" + std::to_string(k) + " requested, series known to O(t^" +
                                std::to_string(order_) + ")");
    if (k < val_ || k >= val_ + static_cast<int>(c_.size())) return K(0);
    return c_[static_cast<std::size_t>(k - val_)];
  }

  /// Residue of the differential f dz. Around a finite point this is the
  /// coefficient of t^-1. Around infinity the local variable is t = 1/z, so
  /// f dz = -f t^-2 dt and the residue is minus the coefficient of t^1.
  K residue() const { return center_.is_infinite() ? K(0) - coefficient(1) : coefficient(-1); }

  LaurentSeries with_order(int order) const {
    LaurentSeries r = *this;
    r.order_ = std::min(order_, order);
    r.normalize();
    return r;
  }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = K(0) - c;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    a.check_center(b);
    int order = std::min(a.order_, b.order_);
    int lo = std::min(a.val_, b.val_);
    int hi = std::max(a.val_ + static_cast<int>(a.c_.size()), b.val_ + static_cast<int>(b.c_.size()));
    hi = std::min(hi, order);
    std::vector<K> c;
    for (int k = lo; k < hi; ++k) c.push_back(a.raw(k) + b.raw(k));
    return truncated(std::move(c), lo, order, a.center_);
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    a.check_center(b);
    int val = a.val_ + b.val_;
    long oa = a.is_exact() ? long(kExact) * 4 : long(a.order_) + b.val_;
    long ob = b.is_exact() ? long(kExact) * 4 : long(b.order_) + a.val_;
    long order_l = std::min(oa, ob);
    int order = order_l >= kExact ? kExact : static_cast<int>(order_l);
    if (a.c_.empty() || b.c_.empty()) return truncated({}, 0, order, a.center_);
    int len = static_cast<int>(a.c_.size() + b.c_.size()) - 1;
    if (order < kExact) len = std::min(len, order - val);
    std::vector<K> c(static_cast<std::size_t>(std::max(len, 0)), K(0));
    for (int i = 0; i < static_cast<int>(a.c_.size()) && i < len; ++i) {
      if (is_zero_value(a.c_[static_cast<std::size_t>(i)])) continue;
      for (int j = 0; j < static_cast<int>(b.c_.size()) && i + j < len; ++j)
        c[static_cast<std::size_t>(i + j)] =
            c[static_cast<std::size_t>(i + j)] + a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    return truncated(std::move(c), val, order, a.center_);
  }

  friend LaurentSeries operator*(const LaurentSeries& a, const K& s) {
    LaurentSeries r = a;
    for (auto& c : r.c_) c = c * s;
    r.normalize();
    return r;
  }

  /// Multiplicative inverse known modulo t^cap (cap only limits exact inputs
  /// further than their intrinsic precision).
  LaurentSeries inverse(int cap) const {
    if (c_.empty()) throw DivisionByZero("inverse of a series with no known nonzero coefficient");
    int rel = is_exact() ? kExact : order_ - val_;  // relative precision
    int order = std::min(cap, is_exact() ? kExact : -val_ + rel);
    int n = order - (-val_);  // number of coefficients to produce
    std::vector<K> out;
    if (n > 0) {
      out.resize(static_cast<std::size_t>(n), K(0));
      K inv0 = K(1) / c_[0];
      for (int k = 0; k < n; ++k) {
        K acc = k == 0 ? K(1) : K(0);
        for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j)
          acc = acc - c_[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc * inv0;
      }
    }
    return truncated(std::move(out), -val_, order, center_);
  }

  /// Integer power known modulo t^cap; negative exponents go through inverse.
  LaurentSeries pow(int e, int cap) const {
    if (e < 0) return pow(-e, cap + 2 * (-e) * std::max(0, val_) + 2 * std::max(0, -val_) * (-e)).inverse(cap);
    LaurentSeries result = exact({K(1)}, 0, center_);
    int slack = std::max(0, -val_) * e;
    for (int i = 0; i < e; ++i) result = (result * *this).with_order(cap + slack);
    return result.with_order(cap);
  }

  /// Derivative d/dt.
  LaurentSeries derivative() const {
    std::vector<K> c;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) c.push_back(c_[static_cast<std::size_t>(i)] * K(val_ + i));
    int order = is_exact() ? kExact : order_ - 1;
    return truncated(std::move(c), val_ - 1, order, center_);
  }

  /// this(inner(t)), inner with positive valuation. Result known modulo t^cap
  /// at most.
  LaurentSeries compose(const LaurentSeries& inner, int cap) const {
    if (inner.val_ < 1) throw DivisionByZero("composition requires an inner series of positive valuation");
    // Horner on the known part; an inexact outer series seeds an O(1) term.
    int top = is_exact() ? val_ + static_cast<int>(c_.size()) : order_;
    LaurentSeries acc = is_exact() ? exact({}, 0, inner.center_) : big_o(0, inner.center_);
    int low = std::min(0, val_);
    int hc = cap - low * inner.val_;
    for (int k = top - 1; k >= low; --k) {
      acc = (acc * inner).with_order(hc) + exact({raw(k)}, 0, inner.center_);
    }
    // acc = sum_k c_k inner^(k - low); multiply back inner^low.
    if (low < 0) acc = acc * inner.pow(low, hc);
    return acc.with_order(cap);
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
      if (is_zero_value(c_[static_cast<std::size_t>(i)])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + to_text(c_[static_cast<std::size_t>(i)]) + ")*t^" + std::to_string(val_ + i);
    }
    if (!is_exact()) out += (out.empty() ? "" : " + ") + std::string("O(t^") + std::to_string(order_) + ")";
    return out.empty() ? "0" : out;
  }

 private:
  template <class V>
  static bool is_zero_value(const V& v) {
    return v.is_zero();
  }
  template <class V>
  static std::string to_text(const V& v) {
    return v.str();
  }

  K raw(int k) const {
    if (k < val_ || k >= val_ + static_cast<int>(c_.size())) return K(0);
    return c_[static_cast<std::size_t>(k - val_)];
  }

  void check_center(const LaurentSeries& o) const {
    if (!(center_ == o.center_)) throw VariableMismatch("series around different centers");
  }

  void normalize() {
    // Drop coefficients at or beyond the truncation order, then strip zeros.
    if (!is_exact()) {
      int keep = order_ - val_;
      if (keep < 0) keep = 0;
      if (static_cast<int>(c_.size()) > keep) c_.resize(static_cast<std::size_t>(keep));
    }
    std::size_t lead = 0;
    while (lead < c_.size() && is_zero_value(c_[lead])) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      val_ = is_exact() ? 0 : order_;
      return;
    }
    if (lead) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      val_ += static_cast<int>(lead);
    }
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }

  Center center_ = Center::finite(Rat(0));
  int val_ = 0;
  std::vector<K> c_;
  int order_ = kExact;
};

using Series = LaurentSeries<Rat>;

/// Residue of a(t) b(t) dt computed as a dot product, reading only the
/// coefficients that matter (and failing loudly if any is unknown).
template <class K>
K residue_of_product(const LaurentSeries<K>& a, const LaurentSeries<K>& b) {
  if (a.is_zero() && a.is_exact()) return K(0);
  if (b.is_zero() && b.is_exact()) return K(0);
  // Coefficient of t^-1: sum_{i} a_i b_{-1-i}.
  int lo = a.valuation();
  int hi = -1 - b.valuation();
  K acc(0);
  for (int i = lo; i <= hi; ++i) acc = acc + a.coefficient(i) * b.coefficient(-1 - i);
  return acc;
}

}  // namespace toprec::alg

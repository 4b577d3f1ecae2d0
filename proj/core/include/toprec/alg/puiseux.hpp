#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toprec/alg/rat.hpp"

namespace toprec::alg {

/// Finite sum of rational powers of one variable plus at most one log term:
/// sum_a c_a tau^a + l * ln(tau).
class PuiseuxSum {
 public:
  PuiseuxSum() = default;
  PuiseuxSum(const Rat& c);  // NOLINT: constant
  template <std::integral I>
  PuiseuxSum(I c) : PuiseuxSum(Rat(c)) {}  // NOLINT
  static PuiseuxSum monomial(const Rat& c, const Rat& exponent);
  static PuiseuxSum log(const Rat& c);

  const std::map<Rat, Rat>& terms() const { return terms_; }
  const std::optional<Rat>& log_coefficient() const { return log_; }
  bool is_zero() const { return terms_.empty() && !log_; }
  bool has_log() const { return log_.has_value(); }
  /// Coefficient of tau^a (0 if absent).
  Rat coeff(const Rat& a) const;
  /// True when the sum is c * tau^a for a single a and no log.
  bool is_monomial() const { return !log_ && terms_.size() == 1; }

  PuiseuxSum operator-() const;
  PuiseuxSum& operator+=(const PuiseuxSum& o);
  PuiseuxSum& operator-=(const PuiseuxSum& o) { return *this += -o; }
  friend PuiseuxSum operator+(PuiseuxSum a, const PuiseuxSum& b) { return a += b; }
  friend PuiseuxSum operator-(PuiseuxSum a, const PuiseuxSum& b) { return a -= b; }
  /// Products involving the log term are not representable and throw.
  friend PuiseuxSum operator*(const PuiseuxSum& a, const PuiseuxSum& b);
  friend PuiseuxSum operator*(PuiseuxSum a, const Rat& s);
  friend bool operator==(const PuiseuxSum& a, const PuiseuxSum& b) {
    return a.terms_ == b.terms_ && a.log_ == b.log_;
  }

  PuiseuxSum derivative() const;
  /// tau^-1 integrates to ln(tau); integration constant is 0.
  PuiseuxSum antiderivative() const;
  PuiseuxSum divide_by_monomial(const Rat& c, const Rat& exponent) const;
  PuiseuxSum multiply_by_monomial(const Rat& c, const Rat& exponent) const;
  PuiseuxSum pow(unsigned e) const;

  /// e.g. "-1/432*tau^-4", "1/24*ln(tau)".
  std::string str(const std::string& var = "tau") const;

 private:
  void put(const Rat& a, const Rat& c);
  std::map<Rat, Rat> terms_;
  std::optional<Rat> log_;
};

/// Truncated series sum_{k < order} hbar^k c_k with PuiseuxSum coefficients.
class HbarSeries {
 public:
  HbarSeries() = default;
  explicit HbarSeries(std::vector<PuiseuxSum> coeffs, int order);
  /// Constant (hbar-independent) exact value truncated at order.
  static HbarSeries constant(const PuiseuxSum& c, int order);

  int order() const { return order_; }
  /// Coefficient of hbar^k; throws InsufficientOrder when k >= order().
  const PuiseuxSum& coeff(int k) const;
  const std::vector<PuiseuxSum>& coeffs() const { return c_; }

  HbarSeries truncated(int order) const;
  friend HbarSeries operator+(const HbarSeries& a, const HbarSeries& b);
  friend HbarSeries operator-(const HbarSeries& a, const HbarSeries& b);
  friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
  /// Multiply by c * hbar^k.
  HbarSeries shifted(int k, const Rat& c) const;
  /// Apply a map coefficientwise.
  template <class F>
  HbarSeries map(F&& f) const {
    std::vector<PuiseuxSum> c;
    for (const auto& x : c_) c.push_back(f(x));
    return HbarSeries(std::move(c), order_);
  }

 private:
  std::vector<PuiseuxSum> c_;  // size == order_
  int order_ = 0;
};

}  // namespace toprec::alg

#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toprec/alg/parser.hpp"
#include "toprec/alg/puiseux.hpp"
#include "toprec/alg/ratfunc.hpp"
#include "toprec/tr/tensor_form.hpp"

// Closed forms of the pure-gravity, (2,3) and Ising correlators at u0 = 1,
// plus a converter from t-space values to the tau variable used internally.
namespace toprec::ref {

using alg::Poly;
using alg::PuiseuxSum;
using alg::Rat;
using alg::RatFunc;
using tr::Pole;
using tr::PoleTuple;
using tr::TensorForm;

using Terms = std::vector<std::pair<PoleTuple, Rat>>;

inline TensorForm form(int g, int n, const Terms& terms) {
  std::map<PoleTuple, Rat> m;
  for (auto [t, c] : terms) {
    std::sort(t.begin(), t.end());
    m[t] += c;
  }
  return TensorForm::from_terms(g, n, m);
}

inline PoleTuple at0(std::vector<int> ks) {
  PoleTuple t;
  for (int k : ks) t.push_back(Pole{Rat(0), k});
  return t;
}

inline PoleTuple repeat(Pole p, int n) { return PoleTuple(static_cast<std::size_t>(n), p); }

/// (3,2): X = z^2 - 2, Y = z^3 - 3z.
inline TensorForm pure_gravity(int g, int n) {
  if (g == 0 && n == 3) return form(0, 3, {{at0({2, 2, 2}), Rat(-1, 6)}});
  if (g == 0 && n == 4) return form(0, 4, {{at0({2, 2, 2, 2}), Rat(1, 36)}, {at0({2, 2, 2, 4}), Rat(3, 36)}});
  if (g == 0 && n == 5) {
    Rat c(-1, 72);
    return form(0, 5, {{at0({2, 2, 2, 2, 2}), c},
                       {at0({2, 2, 2, 2, 4}), c * Rat(3)},
                       {at0({2, 2, 2, 2, 6}), c * Rat(5)},
                       {at0({2, 2, 2, 4, 4}), c * Rat(6)}});
  }
  if (g == 1 && n == 1) return form(1, 1, {{at0({2}), Rat(-1, 144)}, {at0({4}), Rat(-3, 144)}});
  if (g == 1 && n == 2) {
    Rat c(1, 864);
    return form(1, 2, {{at0({2, 2}), c * Rat(2)},
                       {at0({2, 4}), c * Rat(6)},
                       {at0({4, 4}), c * Rat(9)},
                       {at0({2, 6}), c * Rat(15)}});
  }
  Terms t;
  if (g == 2 && n == 1) {
    Rat c(-7, 1024 * 243);
    int k = 2;
    for (int a : {4, 12, 36, 87, 135}) t.push_back({at0({k}), c * Rat(a)}), k += 2;
    return form(2, 1, t);
  }
  if (g == 3 && n == 1) {
    Rat c(-7, 32768L * 19683L);
    int k = 2;
    for (long a : {1400L, 4200L, 12600L, 34740L, 85860L, 181764L, 297297L, 289575L})
      t.push_back({at0({k}), c * Rat(a)}), k += 2;
    return form(3, 1, t);
  }
  throw std::logic_error("no closed form for this (g, n)");
}

/// One-slot form as a rational function of z.
inline RatFunc one_point(const TensorForm& f) {
  RatFunc acc;
  for (const auto& [k, c] : f.terms()) {
    Poly lin(std::vector<Rat>{-k[0].r, Rat(1)});
    acc += RatFunc(Poly(c), lin.pow(static_cast<unsigned>(k[0].k)));
  }
  return acc;
}

inline RatFunc over_power(const char* num, const Poly& base, unsigned e) {
  return RatFunc(alg::parse_poly(num), base.pow(e));
}

inline Poly zm1() { return Poly(std::vector<Rat>{Rat(-1), Rat(1)}); }
inline Poly zp1() { return Poly(std::vector<Rat>{Rat(1), Rat(1)}); }
inline Poly zsq_m1() { return Poly(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)}); }

/// (2,3): X = z^3 - 3z, Y = 2 - z^2.
inline TensorForm dual_w03() {
  return form(0, 3, {{repeat(Pole{Rat(1), 2}, 3), Rat(-1, 12)}, {repeat(Pole{Rat(-1), 2}, 3), Rat(-1, 12)}});
}
inline RatFunc dual_w01() { return RatFunc(alg::parse_poly("3*(z^2-2)*(z^2-1)")); }
inline RatFunc dual_w11() {
  return (over_power("5-3*z+z^2", zm1(), 4) + over_power("5+3*z+z^2", zp1(), 4)) * RatFunc(Rat(-1, 288));
}
inline RatFunc dual_w21() {
  RatFunc a = over_power(
      "7168*z^8-61957*z^7+246834*z^6-602251*z^5+1016572*z^4-1271499*z^3+1218226*z^2-862277*z+369664", zm1(), 10);
  RatFunc b = over_power(
      "7168*z^8+61957*z^7+246834*z^6+602251*z^5+1016572*z^4+1271499*z^3+1218226*z^2+862277*z+369664", zp1(), 10);
  return (a + b) * RatFunc(Rat(-1, 524288L * 243L));
}

/// (4,3): X = z^3 - 3z, Y = z^4 - 4z^2 + 2.
inline RatFunc ising_w11() {
  return (over_power("7+7*z+3*z^2", zp1(), 4) + over_power("7-7*z+3*z^2", zm1(), 4)) * RatFunc(Rat(-1, 576));
}
inline RatFunc ising_w21() {
  return over_power("791 + 10831*z^2 + 5642*z^4 + 8010*z^6 - 5060*z^8 + 6556*z^10 - 4098*z^12 + 1982*z^14 - "
                    "539*z^16 + 77*z^18",
                    zsq_m1(), 10) *
         RatFunc(Rat(-5, 8192L * 243L));
}
inline RatFunc ising_w31() {
  return over_power("1534020 + 51852480*z^2 + 139051115*z^4 + 126732801*z^6 + 14026336*z^8 + 136206860*z^10 - "
                    "165273597*z^12 + 227618305*z^14 - 221591820*z^16 + 175823400*z^18 - 107773575*z^20 + "
                    "51069755*z^22 - 17959320*z^24 + 4465420*z^26 - 701415*z^28 + 53955*z^30",
                    zsq_m1(), 16) *
         RatFunc(Rat(-5, 524288L * 19683L));
}

/// c * prod p^e (rational e) * (a t)^alpha, written in tau with t = rho tau^e.
struct TValue {
  Rat c;
  std::map<long, Rat> radicals;
  Rat a = Rat(1);
  Rat alpha;
};

inline void add_factorization(std::map<long, Rat>& exps, const mpz_class& n, const Rat& power) {
  mpz_class m = abs(n);
  for (long p = 2; m > 1; ++p) {
    while (m % p == 0) {
      exps[p] += power;
      m /= p;
    }
  }
}

inline PuiseuxSum to_tau(const TValue& v, const Rat& rho, const Rat& e) {
  std::map<long, Rat> exps = v.radicals;
  Rat base = v.a * rho;
  if (base.sign() <= 0) throw std::logic_error("base must be positive");
  add_factorization(exps, base.numerator(), v.alpha);
  add_factorization(exps, base.denominator(), -v.alpha);
  Rat c = v.c;
  for (const auto& [p, x] : exps) {
    if (!x.is_integer()) throw std::logic_error("irrational coefficient in tau");
    c *= Rat(p).pow(static_cast<int>(x.numerator().get_si()));
  }
  return PuiseuxSum::monomial(c, e * v.alpha);
}

}  // namespace toprec::ref

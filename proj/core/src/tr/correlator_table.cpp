#include "toprec/tr/correlator_table.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>

#include "toprec/errors.hpp"

namespace toprec::tr {

using alg::Center;
using alg::Series;

namespace {

// Local expansion handles. A slot is either a pole basis element (r', k), the
// m'-th Taylor term of omega_2^(0) against a spectator at r, the constant 1, or
// omega_2^(0)(z, sigma z) itself.
enum class SKind { Pole, W02, One, W02Self };

struct SKey {
  SKind kind = SKind::Pole;
  Rat r;
  int k = 0;
  friend auto operator<=>(const SKey&, const SKey&) = default;
};

SKey pole_key(const Pole& p) { return SKey{SKind::Pole, p.r, p.k}; }

struct Piece {
  std::vector<Pole> spect;
  Rat c;
};

using Group = std::map<SKey, std::vector<Piece>>;

std::string gn(int g, int n) { return "omega_" + std::to_string(n) + "^(" + std::to_string(g) + ")"; }

}  // namespace

struct RamContext {
  Rat r;
  int order = 0;
  Series t, s, sp;
  const curve::SpectralCurve* curve = nullptr;
  Series inv_d;
  std::map<SKey, Series> e1, e2;
  std::map<int, Series> kernel;
  std::map<std::pair<SKey, SKey>, Series> pairs;
  std::map<std::tuple<int, SKey, SKey>, Rat> residues;

  RamContext(const curve::SpectralCurve& c, const Rat& rr, int ord) : r(rr), order(ord), curve(&c) {
    Center ctr = Center::finite(r);
    t = Series::monomial(Rat(1), 1, ctr);
    s = curve::galois_series(c, r, order).s;
    sp = s.derivative();
    Series yr = Series::from_poly(c.Y, r);
    Series xpr = Series::from_poly(c.X.derivative(), r);
    Series d = -((yr - yr.compose(s, order)) * xpr);
    if (!d.coefficient(0).is_zero() || !d.coefficient(1).is_zero() || d.coefficient(2).is_zero())
      throw DegenerateKernel("kernel denominator at " + r.str() + " does not have a double zero");
    inv_d = d.inverse(order);
  }

  int nominal_val(const SKey& k) const {
    switch (k.kind) {
      case SKind::Pole: return k.r == r ? -k.k : 0;
      case SKind::W02: return k.k;
      case SKind::One: return 0;
      case SKind::W02Self: return -2;
    }
    return 0;
  }

  const Series& first(const SKey& k) {
    auto it = e1.find(k);
    if (it != e1.end()) return it->second;
    Center ctr = Center::finite(r);
    Series v;
    switch (k.kind) {
      case SKind::Pole:
        if (k.r == r) v = Series::monomial(Rat(1), -k.k, ctr);
        else v = Series::exact({r - k.r, Rat(1)}, 0, ctr).pow(-k.k, order);
        break;
      case SKind::W02: v = Series::monomial(Rat(k.k + 1), k.k, ctr); break;
      case SKind::One: v = Series::monomial(Rat(1), 0, ctr); break;
      case SKind::W02Self: throw UnsupportedOperation("omega_2^(0)(z, sigma z) has no first-slot form");
    }
    return e1.emplace(k, std::move(v)).first->second;
  }

  const Series& second(const SKey& k) {
    auto it = e2.find(k);
    if (it != e2.end()) return it->second;
    Center ctr = Center::finite(r);
    Series v;
    switch (k.kind) {
      case SKind::Pole:
        if (k.r == r) v = s.pow(-k.k, order) * sp;
        else v = (Series::exact({r - k.r}, 0, ctr) + s).pow(-k.k, order) * sp;
        break;
      case SKind::W02: v = s.pow(k.k, order) * sp * Rat(k.k + 1); break;
      case SKind::One: v = sp; break;
      case SKind::W02Self: v = sp * (t - s).pow(-2, order); break;
    }
    return e2.emplace(k, std::move(v)).first->second;
  }

  const Series& kernel_coeff(int m) {
    auto it = kernel.find(m);
    if (it != kernel.end()) return it->second;
    Series num = t.pow(m, order + m) - s.pow(m, order + m);
    Series k = num * inv_d * Rat(1, 2);
    return kernel.emplace(m, std::move(k)).first->second;
  }

  Rat residue(int m, const SKey& a, const SKey& b) {
    auto key = std::make_tuple(m, a, b);
    auto it = residues.find(key);
    if (it != residues.end()) return it->second;
    auto pk = std::make_pair(a, b);
    auto pit = pairs.find(pk);
    if (pit == pairs.end()) pit = pairs.emplace(pk, first(a) * second(b)).first;
    Rat v = alg::residue_of_product(kernel_coeff(m), pit->second);
    residues.emplace(key, v);
    return v;
  }
};

CorrelatorTable::CorrelatorTable(curve::SpectralCurve c, TruncationPolicy p)
    : curve_(std::move(c)), policy_(p) {
  if (curve::double_point_scan(curve_).degenerate)
    throw DegenerateCurve("parametrization is not injective on a dense set; recursion refused");
}

CorrelatorTable::~CorrelatorTable() = default;

int CorrelatorTable::thread_count() const {
  if (policy_.threads > 0) return policy_.threads;
  if (const char* env = std::getenv("TOPREC_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RamContext& CorrelatorTable::context(std::size_t ri, int order) {
  std::lock_guard<std::mutex> lock(contexts_mutex_);
  auto key = std::make_pair(ri, order);
  auto it = contexts_.find(key);
  if (it == contexts_.end())
    it = contexts_.emplace(key, std::make_unique<RamContext>(curve_, curve_.ramification[ri], order)).first;
  return *it->second;
}

std::vector<KernelTerm> CorrelatorTable::kernel_expansion(const Rat& r, int mmax, int order) {
  auto it = std::find(curve_.ramification.begin(), curve_.ramification.end(), r);
  if (it == curve_.ramification.end()) throw UnsupportedOperation(r.str() + " is not a ramification point");
  RamContext& ctx = context(static_cast<std::size_t>(it - curve_.ramification.begin()), order);
  std::vector<KernelTerm> out;
  for (int m = 1; m <= mmax; ++m) out.push_back({m, ctx.kernel_coeff(m)});
  return out;
}

const TensorForm& CorrelatorTable::omega(int g, int n) {
  if (g < 0 || n < 1 || 2 * g - 2 + n < 1)
    throw UnsupportedOperation(gn(g, n) + " is not a stable correlator (need 2g-2+n >= 1)");
  auto key = std::make_pair(g, n);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  // Lower forms first, sequentially, so the sweep below only reads the cache.
  auto stable = [](int h, int m) { return h >= 0 && m >= 1 && 2 * h - 2 + m >= 1; };
  if (g >= 1 && stable(g - 1, n + 1)) omega(g - 1, n + 1);
  for (int h = 0; h <= g; ++h)
    for (int j = 0; j <= n - 1; ++j) {
      if (stable(h, j + 1) && !(h == g && j == n - 1)) omega(h, j + 1);
      if (stable(g - h, n - j) && !(h == 0 && j == 0)) omega(g - h, n - j);
    }

  const int n0 = initial_order(g, n);
  int order = n0;
  std::map<PoleTuple, Rat> ordered;
  for (;;) {
    try {
      ordered = compute_ordered(g, n, order);
      break;
    } catch (const TruncationExhausted& e) {
      if (order * 2 > policy_.cap_factor * n0)
        throw TruncationExhausted(gn(g, n) + ": local order " + std::to_string(order) +
                                  " exhausted at the cap: " + e.what());
      order *= 2;
    }
  }
  if (policy_.verify) {
    auto again = compute_ordered(g, n, order + policy_.verify_extra);
    if (again != ordered)
      throw IdentityViolation(gn(g, n) + " changes when the local order is raised from " + std::to_string(order) +
                              " to " + std::to_string(order + policy_.verify_extra));
  }
  TensorForm form = TensorForm::from_ordered(g, n, std::move(ordered));
  if (policy_.check_invariants) check_form(form, order + policy_.verify_extra);
  return cache_.emplace(key, std::move(form)).first->second;
}

std::map<PoleTuple, Rat> CorrelatorTable::compute_ordered(int g, int n, int order) {
  const std::size_t nr = curve_.ramification.size();
  std::vector<std::map<PoleTuple, Rat>> parts(nr);
  const std::size_t workers = std::min<std::size_t>(nr, static_cast<std::size_t>(thread_count()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < nr; ++i) parts[i] = compute_at_r(g, n, i, order);
  } else {
    for (std::size_t base = 0; base < nr; base += workers) {
      std::vector<std::future<std::map<PoleTuple, Rat>>> fs;
      for (std::size_t i = base; i < std::min(nr, base + workers); ++i)
        fs.push_back(std::async(std::launch::async, [this, g, n, i, order] { return compute_at_r(g, n, i, order); }));
      for (std::size_t i = 0; i < fs.size(); ++i) parts[base + i] = fs[i].get();
    }
  }
  std::map<PoleTuple, Rat> total;
  for (auto& part : parts)
    for (auto& [tuple, c] : part) total[tuple] += c;
  for (auto it = total.begin(); it != total.end();) {
    if (it->second.is_zero()) it = total.erase(it);
    else ++it;
  }
  return total;
}

std::map<PoleTuple, Rat> CorrelatorTable::compute_at_r(int g, int n, std::size_t ri, int order) {
  RamContext& ctx = context(ri, order);
  const Rat& r = ctx.r;
  std::map<PoleTuple, Rat> out;
  PoleTuple slots(static_cast<std::size_t>(n));

  // Adds cA * cB * Res_r K(z0, z) S1 S2 for every admissible kernel order m.
  auto contribute = [&](const SKey& k1, const SKey& k2, const Rat& c) {
    int mmax = 1 - (ctx.nominal_val(k1) + ctx.nominal_val(k2));
    for (int m = 1; m <= mmax; ++m) {
      Rat res = ctx.residue(m, k1, k2);
      if (res.is_zero()) continue;
      slots[0] = Pole{r, m + 1};
      out[slots] += c * res;
    }
  };

  // Term omega_{n+1}^(g-1)(z, sigma z, z_J).
  if (g >= 1) {
    if (g == 1 && n == 1) {
      contribute(SKey{SKind::One, Rat(0), 0}, SKey{SKind::W02Self, Rat(0), 0}, Rat(1));
    } else {
      for (const auto& [tuple, c] : omega(g - 1, n + 1).ordered()) {
        for (int i = 2; i <= n; ++i) slots[static_cast<std::size_t>(i - 1)] = tuple[static_cast<std::size_t>(i)];
        contribute(pole_key(tuple[0]), pole_key(tuple[1]), c);
      }
    }
  }

  // Products omega^(h)(z, z_I) omega^(g-h)(sigma z, z_{J\I}).
  const int spect = n - 1;
  auto side = [&](int h, const std::vector<int>& pos, int bound) {
    Group grp;
    if (h == 0 && pos.size() == 1) {
      for (int mp = 0; mp <= bound; ++mp)
        grp[SKey{SKind::W02, Rat(0), mp}].push_back(Piece{{Pole{r, mp + 2}}, Rat(1)});
      return grp;
    }
    for (const auto& [tuple, c] : omega(h, static_cast<int>(pos.size()) + 1).ordered())
      grp[pole_key(tuple[0])].push_back(Piece{PoleTuple(tuple.begin() + 1, tuple.end()), c});
    return grp;
  };
  auto min_val = [&](const Group& grp) {
    int v = 0;
    for (const auto& [k, pieces] : grp) v = std::min(v, ctx.nominal_val(k));
    return v;
  };

  for (int h = 0; h <= g; ++h) {
    for (unsigned mask = 0; mask < (1u << spect); ++mask) {
      std::vector<int> in, outp;
      for (int i = 0; i < spect; ++i) ((mask >> i) & 1u ? in : outp).push_back(i + 1);
      if (h == 0 && in.empty()) continue;
      if (g - h == 0 && outp.empty()) continue;
      const bool a_w02 = h == 0 && in.size() == 1;
      const bool b_w02 = g - h == 0 && outp.size() == 1;
      Group ga, gb;
      if (a_w02 && b_w02) {
        ga = side(h, in, 0);
        gb = side(g - h, outp, 0);
      } else if (a_w02) {
        gb = side(g - h, outp, 0);
        ga = side(h, in, -min_val(gb));
      } else if (b_w02) {
        ga = side(h, in, 0);
        gb = side(g - h, outp, -min_val(ga));
      } else {
        ga = side(h, in, 0);
        gb = side(g - h, outp, 0);
      }
      // The second slot of each W02 side is the sigma image.
      for (const auto& [k1, pa] : ga)
        for (const auto& [k2, pb] : gb) {
          int mmax = 1 - (ctx.nominal_val(k1) + ctx.nominal_val(k2));
          if (mmax < 1) continue;
          std::vector<std::pair<int, Rat>> res;
          for (int m = 1; m <= mmax; ++m) {
            Rat v = ctx.residue(m, k1, k2);
            if (!v.is_zero()) res.emplace_back(m, v);
          }
          if (res.empty()) continue;
          for (const auto& a : pa)
            for (const auto& b : pb) {
              for (std::size_t i = 0; i < in.size(); ++i) slots[static_cast<std::size_t>(in[i])] = a.spect[i];
              for (std::size_t i = 0; i < outp.size(); ++i) slots[static_cast<std::size_t>(outp[i])] = b.spect[i];
              Rat c = a.c * b.c;
              for (const auto& [m, v] : res) {
                slots[0] = Pole{r, m + 1};
                out[slots] += c * v;
              }
            }
        }
    }
  }
  return out;
}

void CorrelatorTable::check_form(const TensorForm& f, int order) {
  for (const auto& [rest, fn] : f.first_slot_restrictions())
    if (fn.order_at_infinity() < 2)
      throw UnexpectedPole(gn(f.g(), f.n()) + " has a pole at infinity in its first slot");

  std::map<PoleTuple, std::vector<std::pair<Pole, Rat>>> by_rest;
  for (const auto& [tuple, c] : f.ordered())
    by_rest[PoleTuple(tuple.begin() + 1, tuple.end())].emplace_back(tuple[0], c);
  for (std::size_t ri = 0; ri < curve_.ramification.size(); ++ri) {
    RamContext& ctx = context(ri, order);
    for (const auto& [rest, items] : by_rest) {
      Series sum = Series::exact({}, 0, Center::finite(ctx.r));
      for (const auto& [p, c] : items) sum = sum + (ctx.first(pole_key(p)) + ctx.second(pole_key(p))) * c;
      for (int k = sum.valuation(); k < 0; ++k)
        if (!sum.coefficient(k).is_zero())
          throw IdentityViolation(gn(f.g(), f.n()) + " + its sigma image has a pole at " + ctx.r.str());
    }
  }
}

}  // namespace toprec::tr

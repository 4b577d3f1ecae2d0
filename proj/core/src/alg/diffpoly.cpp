#include "toprec/alg/diffpoly.hpp"

#include <cctype>

#include "toprec/alg/parser.hpp"
#include "toprec/errors.hpp"

namespace toprec::alg {

namespace {
const std::string kHbar = "hbar";

Poly hbar_const(const Rat& c) { return Poly(std::vector<Rat>{c}, kHbar); }
}  // namespace

bool is_constant_generator(const std::string& gen) {
  if (gen.size() < 2 || gen[0] != 't') return false;
  for (std::size_t i = 1; i < gen.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(gen[i]))) return false;
  return true;
}

DiffPoly::DiffPoly(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, hbar_const(c));
}

DiffPoly DiffPoly::generator(const std::string& gen, int order) {
  DiffPoly d;
  if (is_constant_generator(gen) && order > 0) return d;
  d.terms_.emplace(Monomial{{Factor{gen, order}, 1}}, hbar_const(Rat(1)));
  return d;
}

DiffPoly DiffPoly::hbar(int power) { return from_hbar_poly(Poly::monomial(Rat(1), power, kHbar)); }

DiffPoly DiffPoly::from_hbar_poly(const Poly& p) {
  DiffPoly d;
  if (!p.is_zero()) d.terms_.emplace(Monomial{}, p.with_var(kHbar));
  return d;
}

void DiffPoly::add_term(const Monomial& m, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (const auto& [f, e] : mb) m[f] += e;
      r.add_term(m, (ca * cb).with_var(kHbar));
    }
  return r;
}

DiffPoly operator*(DiffPoly a, const Rat& s) {
  if (s.is_zero()) return DiffPoly();
  for (auto& [m, c] : a.terms_) c *= s;
  return a;
}

DiffPoly DiffPoly::d_dt() const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    for (const auto& [f, e] : m) {
      if (is_constant_generator(f.gen)) continue;
      // d(f^e) = e f^(e-1) f'
      Monomial nm = m;
      if (--nm[f] == 0) nm.erase(f);
      nm[Factor{f.gen, f.order + 1}] += 1;
      r.add_term(nm, c * Rat(e));
    }
  }
  return r;
}

Rat DiffPoly::evaluate(const std::map<std::string, Rat>& values, const Rat& hbar) const {
  Rat total;
  for (const auto& [m, c] : terms_) {
    Rat v = c.eval(hbar);
    for (const auto& [f, e] : m) {
      if (f.order > 0) {
        v = Rat(0);
        break;
      }
      auto it = values.find(f.gen);
      v *= (it == values.end() ? Rat(0) : it->second).pow(e);
    }
    total += v;
  }
  return total;
}

DiffPoly DiffPoly::substitute_constants(const std::map<std::string, Rat>& values) const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    Rat scale(1);
    for (const auto& [f, e] : m) {
      auto it = values.find(f.gen);
      if (it == values.end()) {
        nm[f] = e;
      } else if (f.order == 0) {
        scale *= it->second.pow(e);
      } else {
        scale = Rat(0);
      }
    }
    if (!scale.is_zero()) r.add_term(nm, c * scale);
  }
  return r;
}

HbarSeries DiffPoly::substitute_series(const std::map<std::string, HbarSeries>& gens, const Dt& dt,
                                       int order) const {
  std::map<Factor, HbarSeries> jets;
  auto jet = [&](const Factor& f) -> const HbarSeries& {
    auto it = jets.find(f);
    if (it != jets.end()) return it->second;
    auto g = gens.find(f.gen);
    if (g == gens.end()) throw InsufficientOrder("no series supplied for generator '" + f.gen + "'");
    if (g->second.order() < order)
      throw InsufficientOrder("series for '" + f.gen + "' known to hbar^" + std::to_string(g->second.order()) +
                              ", need " + std::to_string(order));
    HbarSeries s = g->second.truncated(order);
    for (int j = 0; j < f.order; ++j) s = s.map(dt);
    return jets.emplace(f, std::move(s)).first->second;
  };
  HbarSeries total(std::vector<PuiseuxSum>(static_cast<std::size_t>(order)), order);
  for (const auto& [m, c] : terms_) {
    HbarSeries prod = HbarSeries::constant(PuiseuxSum(Rat(1)), order);
    for (const auto& [f, e] : m)
      for (int i = 0; i < e; ++i) prod = prod * jet(f);
    HbarSeries scaled(std::vector<PuiseuxSum>(static_cast<std::size_t>(order)), order);
    for (int k = 0; k <= c.degree(); ++k)
      if (!c.coeff(k).is_zero()) scaled = scaled + prod.shifted(k, c.coeff(k));
    total = total + scaled;
  }
  return total;
}

std::string DiffPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    for (int k = c.degree(); k >= 0; --k) {
      const Rat& a = c.coeff(k);
      if (a.is_zero()) continue;
      std::string mono;
      if (k > 0) mono = k == 1 ? kHbar : kHbar + "^" + std::to_string(k);
      for (const auto& [f, e] : m) {
        if (!mono.empty()) mono += "*";
        mono += f.str();
        if (e > 1) mono += "^" + std::to_string(e);
      }
      bool neg = a.sign() < 0;
      Rat ab = a.abs();
      if (!out.empty()) out += neg ? "-" : "+";
      else if (neg) out += "-";
      if (mono.empty()) out += ab.str();
      else if (ab.is_one()) out += mono;
      else out += ab.str() + "*" + mono;
    }
  }
  return out;
}

XDiff::XDiff(const DiffPoly& c) {
  if (!c.is_zero()) c_.push_back(c);
}

XDiff::XDiff(std::vector<DiffPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

XDiff XDiff::x() { return XDiff(std::vector<DiffPoly>{DiffPoly(), DiffPoly(Rat(1))}); }

void XDiff::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffPoly XDiff::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return DiffPoly();
  return c_[static_cast<std::size_t>(i)];
}

XDiff XDiff::operator-() const {
  XDiff r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

XDiff operator+(const XDiff& a, const XDiff& b) {
  std::vector<DiffPoly> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return XDiff(std::move(c));
}

XDiff operator-(const XDiff& a, const XDiff& b) { return a + (-b); }

XDiff operator*(const XDiff& a, const XDiff& b) {
  if (a.is_zero() || b.is_zero()) return XDiff();
  std::vector<DiffPoly> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return XDiff(std::move(c));
}

XDiff XDiff::d_dt() const {
  std::vector<DiffPoly> c;
  for (const auto& a : c_) c.push_back(a.d_dt());
  return XDiff(std::move(c));
}

XDiff XDiff::d_dx() const {
  std::vector<DiffPoly> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * Rat(static_cast<long>(i)));
  return XDiff(std::move(c));
}

DiffPoly XDiff::at_x(const Rat& x) const {
  DiffPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * DiffPoly(x) + *it;
  return acc;
}

Poly XDiff::evaluate(const std::map<std::string, Rat>& values, const Rat& hbar) const {
  std::vector<Rat> c;
  for (const auto& a : c_) c.push_back(a.evaluate(values, hbar));
  return Poly(std::move(c), "x");
}

std::string XDiff::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const DiffPoly& a = c_[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (!out.empty()) out += "+";
    if (mono.empty()) out += "(" + a.str() + ")";
    else out += "(" + a.str() + ")*" + mono;
  }
  return out;
}

namespace {

DiffPoly resolve_symbol(const std::string& ident) {
  if (ident == kHbar) return DiffPoly::hbar();
  std::size_t primes = 0;
  while (primes < ident.size() && ident[ident.size() - 1 - primes] == '\'') ++primes;
  std::string base = ident.substr(0, ident.size() - primes);
  if (base.empty() || base == "x") throw ParseError("symbol '" + ident + "' is not a generator");
  return DiffPoly::generator(base, static_cast<int>(primes));
}

}  // namespace

DiffPoly parse_diffpoly(const std::string& text) { return parse_expression<DiffPoly>(text, resolve_symbol); }

XDiff parse_xdiff(const std::string& text) {
  return parse_expression<XDiff>(text, [](const std::string& ident) -> XDiff {
    if (ident == "x") return XDiff::x();
    return XDiff(resolve_symbol(ident));
  });
}

Poly parse_poly(std::string_view text, const std::string& var) {
  return parse_expression<Poly>(text, [&](const std::string& ident) -> Poly {
    if (ident != var) throw ParseError("unknown symbol '" + ident + "' (expected '" + var + "')");
    return Poly::variable(var);
  }).with_var(var);
}

}  // namespace toprec::alg

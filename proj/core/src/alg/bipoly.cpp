#include "toprec/alg/bipoly.hpp"

#include <algorithm>
#include <tuple>

namespace toprec::alg {

namespace {
const Rat kZero{};
}

BiPoly::BiPoly(const Rat& c) {
  if (!c.is_zero()) c_ = {{c}};
}

BiPoly::BiPoly(std::vector<std::vector<Rat>> coeffs) : c_(std::move(coeffs)) { trim(); }

void BiPoly::trim() {
  for (auto& row : c_)
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BiPoly BiPoly::x() { return BiPoly({{}, {Rat(1)}}); }
BiPoly BiPoly::y() { return BiPoly({{Rat(0), Rat(1)}}); }

BiPoly BiPoly::from_x(const Poly& p) {
  std::vector<std::vector<Rat>> c;
  for (const auto& a : p.coeffs()) c.push_back({a});
  return BiPoly(std::move(c));
}

BiPoly BiPoly::from_y(const Poly& p) { return BiPoly({p.coeffs()}); }

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

const Rat& BiPoly::coeff(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  const auto& row = c_[static_cast<std::size_t>(i)];
  if (j < 0 || j >= static_cast<int>(row.size())) return kZero;
  return row[static_cast<std::size_t>(j)];
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& row : r.c_)
    for (auto& c : row) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    auto& row = c_[i];
    const auto& orow = o.c_[i];
    if (orow.size() > row.size()) row.resize(orow.size());
    for (std::size_t j = 0; j < orow.size(); ++j) row[j] += orow[j];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly& BiPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& row : c_)
    for (auto& c : row) c *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<std::vector<Rat>> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i1 = 0; i1 < a.c_.size(); ++i1)
    for (std::size_t i2 = 0; i2 < b.c_.size(); ++i2) {
      const auto& ra = a.c_[i1];
      const auto& rb = b.c_[i2];
      if (ra.empty() || rb.empty()) continue;
      auto& out = r[i1 + i2];
      if (out.size() < ra.size() + rb.size() - 1) out.resize(ra.size() + rb.size() - 1);
      for (std::size_t j1 = 0; j1 < ra.size(); ++j1) {
        if (ra[j1].is_zero()) continue;
        for (std::size_t j2 = 0; j2 < rb.size(); ++j2) out[j1 + j2] += ra[j1] * rb[j2];
      }
    }
  return BiPoly(std::move(r));
}

Poly BiPoly::y_coeff(int j, std::string var) const {
  std::vector<Rat> c;
  for (int i = 0; i <= deg_x(); ++i) c.push_back(coeff(i, j));
  return Poly(std::move(c), std::move(var));
}

Poly BiPoly::x_coeff(int i, std::string var) const {
  if (i < 0 || i > deg_x()) return Poly(std::vector<Rat>{}, std::move(var));
  return Poly(c_[static_cast<std::size_t>(i)], std::move(var));
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rat row;
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * y + *jt;
    acc = acc * x + row;
  }
  return acc;
}

bool BiPoly::proportional_to(const BiPoly& o, Rat* c) const {
  if (is_zero() || o.is_zero()) return false;
  // Pick the first nonzero coefficient of o to fix the ratio.
  Rat ratio;
  bool have = false;
  for (int i = 0; i <= o.deg_x() && !have; ++i)
    for (int j = 0; j <= o.deg_y() && !have; ++j)
      if (!o.coeff(i, j).is_zero()) {
        ratio = coeff(i, j) / o.coeff(i, j);
        have = true;
      }
  if (ratio.is_zero()) return false;
  if (!(*this == o * ratio)) return false;
  if (c) *c = ratio;
  return true;
}

std::string BiPoly::str() const {
  if (c_.empty()) return "0";
  std::vector<std::tuple<int, int, int>> order;  // (-total, -i, j)
  for (int i = 0; i <= deg_x(); ++i)
    for (int j = 0; j <= deg_y(); ++j)
      if (!coeff(i, j).is_zero()) order.emplace_back(-(i + j), -i, j);
  std::sort(order.begin(), order.end());
  std::string out;
  for (const auto& [nt, ni, j] : order) {
    int i = -ni;
    const Rat& c = coeff(i, j);
    bool neg = c.sign() < 0;
    Rat a = c.abs();
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    std::string mono;
    auto add = [&](const char* v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    add("x", i);
    add("y", j);
    if (mono.empty()) out += a.str();
    else if (a.is_one()) out += mono;
    else out += a.str() + "*" + mono;
  }
  return out;
}

}  // namespace toprec::alg

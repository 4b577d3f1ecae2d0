#include "toprec/kp/pq_model.hpp"

#include <regex>

#include "toprec/alg/parser.hpp"
#include "toprec/errors.hpp"
#include "toprec/kp/chebyshev.hpp"

namespace toprec::kp {

using alg::parse_diffpoly;
using alg::Poly;

DiffOpX::DiffOpX(std::vector<XDiff> c) : c_(std::move(c)) { trim(); }

DiffOpX DiffOpX::identity() { return DiffOpX({XDiff(1)}); }

XDiff DiffOpX::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return XDiff();
  return c_[static_cast<std::size_t>(j)];
}

void DiffOpX::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOpX operator+(const DiffOpX& a, const DiffOpX& b) {
  std::vector<XDiff> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(static_cast<int>(j)) + b.coeff(static_cast<int>(j));
  return DiffOpX(std::move(c));
}

DiffOpX operator-(const DiffOpX& a, const DiffOpX& b) {
  std::vector<XDiff> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(static_cast<int>(j)) - b.coeff(static_cast<int>(j));
  return DiffOpX(std::move(c));
}

DiffOpX operator*(const XDiff& f, const DiffOpX& a) {
  std::vector<XDiff> c;
  for (const auto& x : a.c_) c.push_back(f * x);
  return DiffOpX(std::move(c));
}

// (hbar d)(c D^j) = hbar c' D^j + c D^(j+1)
DiffOpX DiffOpX::hbar_d() const {
  std::vector<XDiff> c(c_.size() + 1);
  XDiff h(DiffPoly::hbar());
  for (std::size_t j = 0; j < c_.size(); ++j) {
    c[j] = c[j] + h * c_[j].d_dt();
    c[j + 1] = c[j + 1] + c_[j];
  }
  return DiffOpX(std::move(c));
}

std::string DiffOpX::str() const {
  std::string out;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[j].str() + ")";
    if (j == 1) out += "*D";
    else if (j > 1) out += "*D^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> PQModel::auxiliary_generators() const {
  if (p == 4 && q == 3) return {"w"};
  return {};
}

namespace {

std::vector<DiffPoly> parse_all(const std::vector<std::string>& src) {
  std::vector<DiffPoly> out;
  for (const auto& s : src) out.push_back(parse_diffpoly(s));
  return out;
}

}  // namespace

PQModel make_model(int p, int q, const std::map<std::string, Rat>& constants) {
  static const std::regex name(R"(t[0-9]+)");
  for (const auto& [k, v] : constants)
    if (!std::regex_match(k, name)) throw UnsupportedModel("unknown model constant '" + k + "'");

  PQModel m;
  m.p = p;
  m.q = q;
  m.constants = constants;
  const std::string painleve = "-1/2*hbar^2*u'' + 3*u^2";
  if (p == 3 && q == 2) {
    m.u = parse_all({"-2*u", "0", "1"});
    m.v = parse_all({"-3/2*hbar*u' + t1", "-3*u", "0", "1"});
    m.f = chebyshev(2);
    m.g = chebyshev(3);
    m.string_equation = parse_diffpoly(painleve);
  } else if (p == 2 && q == 3) {
    m.u = parse_all({"-3/2*hbar*u' + t1", "-3*u", "0", "1"});
    m.v = parse_all({"-2*u", "0", "1"});
    m.f = chebyshev(3);
    m.g = -chebyshev(2);
    m.string_equation = parse_diffpoly(painleve);
  } else if (p == 4 && q == 3) {
    m.u = parse_all({"-3/2*hbar*u' - 3*w + t1", "-3*u", "0", "1"});
    m.v = parse_all({"2*u^2 - 5/3*hbar^2*u'' - 2*hbar*w' + t2", "-4*w - 4*hbar*u'", "-4*u", "0", "1"});
    m.f = chebyshev(3);
    m.g = chebyshev(4);
    m.string_equation = parse_diffpoly("1/6*hbar^4*u'''' - 3*hbar^2*u*u'' - 3/2*hbar^2*u'^2 + 4*u^3");
  } else if (p == q + 1 && q >= 2) {
    m.f = chebyshev(q);
    m.g = chebyshev(p);
  } else {
    throw UnsupportedModel("model (" + std::to_string(p) + "," + std::to_string(q) +
                           ") is not supported; use (3,2), (2,3), (4,3) or (q+1,q)");
  }
  // Unlisted constants are 0.
  std::map<std::string, Rat> all;
  for (int i = 1; i <= 9; ++i) all["t" + std::to_string(i)] = Rat(0);
  for (const auto& [k, v] : constants) all[k] = v;
  for (auto& c : m.u) c = c.substitute_constants(all);
  for (auto& c : m.v) c = c.substitute_constants(all);
  m.rho = validate_pair(m.f, m.g, p, q);
  return m;
}

curve::SpectralCurve build_model_curve(const PQModel& m) { return curve::build_curve(m.f, m.g); }

namespace {

void require_operators(const PQModel& m) {
  if (!m.has_operators())
    throw UnsupportedModel("operators of model " + m.name() + " are not available (curve only)");
}

DiffOpX x_minus_q(const PQModel& m) {
  std::vector<XDiff> c;
  for (int k = 0; k <= m.q; ++k) c.push_back(XDiff() - XDiff(m.u[static_cast<std::size_t>(k)]));
  c[0] = c[0] + XDiff::x();
  return DiffOpX(std::move(c));
}

DiffOpX fold_step(const DiffOpX& f, const DiffOpX& xq, int q) {
  DiffOpX next = f.hbar_d() + f.coeff(q - 1) * xq;
  if (next.order() > q - 1)
    throw IdentityViolation("folding produced an operator of order " + std::to_string(next.order()));
  return next;
}

}  // namespace

std::vector<DiffOpX> fold(const PQModel& m) {
  require_operators(m);
  DiffOpX xq = x_minus_q(m);
  std::vector<DiffOpX> F{DiffOpX::identity()};
  for (int l = 0; l < m.p; ++l) F.push_back(fold_step(F.back(), xq, m.q));
  return F;
}

LaxPair build_lax(const PQModel& m) {
  auto F = fold(m);
  DiffOpX xq = x_minus_q(m);
  DiffOpX row;
  for (int l = 0; l <= m.p; ++l)
    row = row - XDiff(m.v[static_cast<std::size_t>(l)]) * F[static_cast<std::size_t>(l)];
  const auto q = static_cast<std::size_t>(m.q);
  LaxPair lp;
  lp.L.assign(q, std::vector<XDiff>(q));
  lp.M.assign(q, std::vector<XDiff>(q));
  for (std::size_t k = 0; k < q; ++k) {
    if (row.order() > m.q - 1) throw IdentityViolation("Lax row of order " + std::to_string(row.order()));
    for (std::size_t j = 0; j < q; ++j) lp.L[k][j] = row.coeff(static_cast<int>(j));
    if (k + 1 < q) row = fold_step(row, xq, m.q);
  }
  for (std::size_t i = 0; i + 1 < q; ++i) lp.M[i][i + 1] = XDiff(1);
  for (std::size_t j = 0; j < q; ++j) lp.M[q - 1][j] = XDiff() - XDiff(m.u[j]);
  lp.M[q - 1][0] = lp.M[q - 1][0] + XDiff::x();
  return lp;
}

}  // namespace toprec::kp

#include "toprec/loopeq/checks.hpp"

#include <algorithm>
#include <numeric>

#include "toprec/errors.hpp"

namespace toprec::loopeq {

namespace {

RatFunc xvar() { return RatFunc(Poly::variable("x")); }

RatFunc trace(const Matrix<RatFunc>& m) {
  RatFunc t;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

Matrix<RatFunc> identity(std::size_t n) {
  Matrix<RatFunc> m(n, std::vector<RatFunc>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = RatFunc(1);
  return m;
}

Matrix<RatFunc> add(Matrix<RatFunc> a, const Matrix<RatFunc>& b, const RatFunc& s = RatFunc(1)) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += s * b[i][j];
  return a;
}

Matrix<RatFunc> lift(const Matrix<Rat>& g) {
  Matrix<RatFunc> m(g.size(), std::vector<RatFunc>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m[i][j] = RatFunc(g[i][j]);
  return m;
}

std::string mat_str(const Matrix<RatFunc>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < m.size(); ++j) out += (j ? ", " : "") + m[i][j].str();
  }
  return out + "]";
}

CheckReport compare(std::string name, const RatFunc& lhs, const RatFunc& rhs) {
  CheckReport r{std::move(name), lhs == rhs, lhs.str(), rhs.str(), ""};
  if (!r.pass) throw IdentityViolation(r.name + ": lhs " + r.lhs + " != rhs " + r.rhs);
  return r;
}

void fail(const std::string& name, const std::string& what) { throw IdentityViolation(name + ": " + what); }

std::string pts_str(const std::vector<SheetPoint>& pts) {
  std::string out;
  for (const auto& p : pts) out += (out.empty() ? "" : ", ") + p.p.str() + "^" + std::to_string(p.sheet + 1);
  return out;
}

SheetPoint at_x(int a) { return SheetPoint{Point::x(), a}; }

std::vector<SheetPoint> with(std::vector<SheetPoint> head, const std::vector<SheetPoint>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

bool regular_at(const PsiSystem& sys, const Rat& v) {
  try {
    if (sys.det().eval(v).is_zero()) return false;
    sys.psi_at(Point::at(v));
    sys.L_at(Point::at(v));
    return true;
  } catch (const Error&) {
    return false;
  }
}

RatFunc p3(const Correlators& c, const SheetPoint& y1, const SheetPoint& y2, bool anticommutator) {
  const auto& L = c.system().L();
  const RatFunc hb(c.system().hbar());
  RatFunc d1 = xvar() - RatFunc(y1.p.value), d2 = xvar() - RatFunc(y2.p.value);
  RatFunc y12 = RatFunc(y1.p.value - y2.p.value);
  RatFunc t = y12 * y12 * c.W({y1, y2});  // = Tr P1 P2
  auto P1 = c.projector(y1), P2 = c.projector(y2);
  RatFunc sq = (d1 * d1 * d2 * d2).inverse();
  if (anticommutator) {
    auto S = add(alg::matmul(P1, P2), alg::matmul(P2, P1));
    return -trace(alg::matmul(S, L)) / (hb * d1 * d2) + (t + RatFunc(1)) * sq;
  }
  auto C = add(alg::matmul(P1, P2), alg::matmul(P2, P1), RatFunc(-1));
  return -trace(alg::matmul(L, C)) / (hb * d1 * d2 * y12) + (RatFunc(1) - t) * sq;
}

}  // namespace

std::vector<Rat> regular_points(const PsiSystem& sys, std::size_t count, std::size_t skip) {
  std::vector<Rat> out;
  for (long i = 0; out.size() < count; ++i) {
    Rat v(i % 2 ? -(2 + i) : 2 + i, 1 + i % 3);
    if (std::find(out.begin(), out.end(), v) != out.end() || !regular_at(sys, v)) continue;
    if (skip) {
      --skip;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

CheckReport check_replication(const PsiSystem& sys, const Rat& x1, const Rat& x2, const Rat& x3) {
  Correlators c(sys);
  auto p1 = Point::at(x1), p2 = Point::at(x2), p3 = Point::at(x3);
  auto lhs = alg::matmul(c.kernel(p1, p2), c.kernel(p2, p3));
  auto rhs = c.kernel(p1, p3);
  RatFunc f = RatFunc(x1 - x3) / RatFunc((x1 - x2) * (x2 - x3));
  for (auto& row : rhs)
    for (auto& e : row) e *= f;
  CheckReport r{"replication at " + x1.str() + ", " + x2.str() + ", " + x3.str(), lhs == rhs, mat_str(lhs),
                mat_str(rhs), ""};
  if (!r.pass) fail(r.name, "K(x1,x2)K(x2,x3) = " + r.lhs + " but expected " + r.rhs);
  return r;
}

CheckReport check_linear(const PsiSystem& sys, int n, const std::vector<SheetPoint>& fixed) {
  if (n < 1 || n > 4) throw UnsupportedOperation("check_linear supports 1 <= n <= 4");
  if (static_cast<int>(fixed.size()) != n - 1) throw UnsupportedOperation("check_linear needs n - 1 fixed points");
  Correlators c(sys);
  RatFunc lhs;
  for (int a = 0; a < sys.d(); ++a) lhs += c.W(with({at_x(a)}, fixed));
  RatFunc rhs;
  if (n == 1) rhs = -trace(sys.L()) / RatFunc(sys.hbar());
  if (n == 2) {
    RatFunc dx = xvar() - RatFunc(fixed[0].p.value);
    rhs = (dx * dx).inverse();
  }
  return compare("linear n=" + std::to_string(n) + (fixed.empty() ? "" : " at " + pts_str(fixed)), lhs, rhs);
}

void require_poles_within(const RatFunc& f, const std::vector<Poly>& allowed, const std::string& what) {
  Poly den = f.den();
  for (const auto& a : allowed) {
    if (a.degree() < 1) continue;
    for (Poly g = gcd(den, a); g.degree() > 0; g = gcd(den, a)) den = den.divrem(g).first;
  }
  if (den.degree() > 0) throw UnexpectedPole(what + ": pole at the roots of " + den.monic().str());
}

CheckReport check_quadratic(const PsiSystem& sys, int n, const std::vector<SheetPoint>& fixed) {
  if (n < 1 || n > 3) throw UnsupportedOperation("check_quadratic supports 1 <= n <= 3");
  if (static_cast<int>(fixed.size()) != n - 1) throw UnsupportedOperation("check_quadratic needs n - 1 fixed points");
  for (const auto& f : fixed)
    if (f.p.symbolic) throw UnsupportedOperation("fixed points must be numeric");
  Correlators c(sys);
  const int d = sys.d();
  const std::size_t m = fixed.size();
  RatFunc lhs;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      lhs += c.W(with({at_x(a), at_x(b)}, fixed));
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<SheetPoint> J, rest;
        for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1u ? J : rest).push_back(fixed[i]);
        lhs += c.W(with({at_x(a)}, J)) * c.W(with({at_x(b)}, rest));
      }
    }
  const RatFunc hb(sys.hbar());
  const auto& L = sys.L();
  RatFunc rhs;
  if (n == 1) {
    RatFunc t = trace(L);
    rhs = (t * t - trace(alg::matmul(L, L))) / (RatFunc(2) * hb * hb);
  } else if (n == 2) {
    RatFunc dx = xvar() - RatFunc(fixed[0].p.value);
    auto P = add(c.projector(fixed[0]), identity(static_cast<std::size_t>(d)), RatFunc(-1));
    rhs = trace(alg::matmul(L, P)) / (hb * dx * dx);
  } else {
    rhs = p3(c, fixed[0], fixed[1], false);
  }
  std::string name = "quadratic n=" + std::to_string(n) + (fixed.empty() ? "" : " at " + pts_str(fixed));
  CheckReport r = compare(name, lhs, rhs);
  std::vector<Poly> allowed;
  for (const auto& f : fixed) allowed.push_back(Poly(std::vector<Rat>{-f.p.value, Rat(1)}, "x"));
  for (const auto& row : L)
    for (const auto& e : row) allowed.push_back(e.den());
  require_poles_within(lhs, allowed, name);
  r.detail = "poles within fixed points and poles of L";
  return r;
}

RatFunc quadratic_rhs(const PsiSystem& sys, const SheetPoint& y1, const SheetPoint& y2, bool anticommutator) {
  Correlators c(sys);
  return p3(c, y1, y2, anticommutator);
}

CheckReport check_p3_anticommutator(const PsiSystem& sys, const SheetPoint& y1, const SheetPoint& y2) {
  CheckReport r = check_quadratic(sys, 3, {y1, y2});
  RatFunc variant = quadratic_rhs(sys, y1, y2, true);
  r.name = "anticommutator P_3 at " + pts_str({y1, y2});
  r.rhs = variant.str();
  r.pass = r.lhs == r.rhs;
  if (!r.pass) fail(r.name, "lhs " + r.lhs + " != " + r.rhs);
  return r;
}

CheckReport check_spectral_identity(const PsiSystem& sys, const Rat& x0) {
  const Point p = Point::at(x0);
  Correlators c(sys);
  const int d = sys.d();
  auto Lx = sys.L_at(p);
  Matrix<Rat> L0(static_cast<std::size_t>(d), std::vector<Rat>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) L0[i][j] = Lx[i][j].eval(Rat(0));
  std::vector<Rat> charpoly = alg::berkowitz(L0);  // coefficient of y^(d-k) at k
  std::vector<Rat> sums(static_cast<std::size_t>(d + 1));
  sums[0] = Rat(1);
  Rat hk(1);
  for (int k = 1; k <= d; ++k) {
    hk *= sys.hbar();
    std::vector<bool> sel(static_cast<std::size_t>(d));
    std::fill(sel.begin(), sel.begin() + k, true);
    Rat acc;
    do {
      std::vector<SheetPoint> pts;
      for (int a = 0; a < d; ++a)
        if (sel[static_cast<std::size_t>(a)]) pts.push_back({p, a});
      acc += c.W_bar(pts).eval(Rat(0));
    } while (std::prev_permutation(sel.begin(), sel.end()));
    sums[static_cast<std::size_t>(k)] = hk * acc;
  }
  auto poly = [](const std::vector<Rat>& c) {
    std::vector<Rat> r(c.rbegin(), c.rend());
    return Poly(r, "y");
  };
  std::string name = "spectral identity at x=" + x0.str();
  CheckReport r{name, charpoly == sums, poly(charpoly).str(), poly(sums).str(), ""};
  if (!r.pass) fail(name, "det(y - L) = " + r.lhs + " but correlator expansion gives " + r.rhs);
  if (d >= 2) {
    RatFunc t = trace(Lx);
    Rat p1 = ((t * t - trace(alg::matmul(Lx, Lx))) / RatFunc(2)).eval(Rat(0));
    if (charpoly[2] != p1) fail(name, "y^(d-2) coefficient " + charpoly[2].str() + " != hbar^2 P_1 = " + p1.str());
    r.detail = "y^(d-2) coefficient equals hbar^2 P_1(x0) = " + p1.str();
  }
  return r;
}

CheckReport check_symmetry(const PsiSystem& sys, const std::vector<SheetPoint>& pts) {
  Correlators c(sys);
  RatFunc ref = c.W(pts);
  std::vector<std::size_t> perm(pts.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::string name = "symmetry of W_" + std::to_string(pts.size()) + " at " + pts_str(pts);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<SheetPoint> q;
    for (auto i : perm) q.push_back(pts[i]);
    RatFunc v = c.W(q);
    if (v != ref) fail(name, "permuted value " + v.str() + " != " + ref.str());
  }
  return CheckReport{name, true, ref.str(), ref.str(), ""};
}

CheckReport check_w3_regular(const PsiSystem& sys, int a, const SheetPoint& y, const SheetPoint& z) {
  Correlators c(sys);
  RatFunc w = c.W({at_x(a), y, z});
  std::string name = "W_3 regular at coinciding points (" + pts_str({at_x(a), y, z}) + ")";
  for (const auto& q : {y, z}) {
    if (w.den().eval(q.p.value).is_zero())
      fail(name, "pole at x = " + q.p.value.str() + ", residue " + w.residue_at(q.p.value).str());
  }
  return CheckReport{name, true, w.str(), "regular at " + y.p.str() + ", " + z.p.str(), ""};
}

namespace {

struct Samples {
  std::vector<std::vector<SheetPoint>> symbolic;  // first slot x
  std::vector<std::vector<SheetPoint>> numeric;
};

Samples gauge_samples(const PsiSystem& sys) {
  const int d = sys.d();
  auto pts = regular_points(sys, 3);
  Samples s;
  for (int a = 0; a < d; ++a) {
    s.symbolic.push_back({at_x(a)});
    s.symbolic.push_back({at_x(a), {Point::at(pts[0]), (a + 1) % d}});
  }
  s.numeric.push_back({{Point::at(pts[0]), 0}, {Point::at(pts[1]), d > 1 ? 1 : 0}});
  s.numeric.push_back({{Point::at(pts[0]), 0}, {Point::at(pts[1]), (d - 1) % d}, {Point::at(pts[2]), d > 2 ? 2 : 0}});
  return s;
}

}  // namespace

CheckReport check_gauge_constant(const PsiSystem& sys, const Matrix<Rat>& G) {
  const std::string name = "constant gauge";
  auto Gm = lift(G);
  RatFunc detG;
  auto Ginv = inverse(Gm, &detG);
  PsiSystem other(alg::matmul(Gm, sys.psi()), sys.hbar());
  auto expect = alg::matmul(alg::matmul(Gm, sys.L()), Ginv);
  if (other.L() != expect) fail(name, "L -> " + mat_str(other.L()) + " instead of G L G^-1");
  Correlators c0(sys), c1(other);
  auto samples = gauge_samples(sys);
  std::size_t count = 0;
  for (const auto* group : {&samples.symbolic, &samples.numeric})
    for (const auto& pts : *group) {
      RatFunc a = c0.W(pts), b = c1.W(pts);
      if (a != b) fail(name, "W_" + std::to_string(pts.size()) + "(" + pts_str(pts) + ") " + a.str() + " -> " + b.str());
      ++count;
    }
  return CheckReport{name, true, mat_str(other.L()), mat_str(expect), std::to_string(count) + " correlators unchanged"};
}

ScalarGaugeReport check_gauge_scalar(const PsiSystem& sys, const RatFunc& g) {
  const std::string name = "scalar gauge by " + g.str();
  if (g.is_zero()) throw UnsupportedOperation("scalar gauge needs g != 0");
  const std::size_t d = static_cast<std::size_t>(sys.d());
  auto psi = sys.psi();
  for (auto& row : psi)
    for (auto& e : row) e *= g;
  PsiSystem other(std::move(psi), sys.hbar());
  const RatFunc log_dg = g.derivative() / g;
  auto expect = add(sys.L(), identity(d), RatFunc(sys.hbar()) * log_dg);
  if (other.L() != expect) fail(name, "L -> " + mat_str(other.L()) + " instead of L + hbar g'/g");

  Correlators c0(sys), c1(other);
  auto pts = regular_points(other, 3);
  for (const auto& y : pts) {
    auto k0 = c0.kernel(Point::x(), Point::at(y));
    auto k1 = c1.kernel(Point::x(), Point::at(y));
    RatFunc f = RatFunc(g.eval(y)) / g;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (k1[i][j] != f * k0[i][j]) fail(name, "K(x," + y.str() + ") not rescaled by g(y)/g(x)");
    for (int a = 0; a < static_cast<int>(d); ++a)
      if (c0.projector({Point::at(y), a}) != c1.projector({Point::at(y), a}))
        fail(name, "projector P(" + y.str() + "^" + std::to_string(a + 1) + ") changed");
  }
  ScalarGaugeReport out;
  out.w1_invariant = true;
  out.w1_shift_exact = true;
  auto samples = gauge_samples(other);
  std::size_t count = 0;
  for (const auto* group : {&samples.symbolic, &samples.numeric})
    for (const auto& p : *group) {
      RatFunc a = c0.W(p), b = c1.W(p);
      if (p.size() == 1) {
        out.w1_invariant = out.w1_invariant && a == b;
        out.w1_shift_exact = out.w1_shift_exact && b == a - log_dg;
        continue;
      }
      if (a != b) fail(name, "W_" + std::to_string(p.size()) + "(" + pts_str(p) + ") " + a.str() + " -> " + b.str());
      ++count;
    }
  if (!out.w1_shift_exact) fail(name, "W_1 does not shift by -g'/g");
  out.report = CheckReport{name, true, mat_str(other.L()), mat_str(expect),
                           "K rescaled, projectors and " + std::to_string(count) +
                               " correlators W_n (n >= 2) unchanged; W_1 -> W_1 - (" + log_dg.str() + ")"};
  return out;
}

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; });
}

const std::vector<std::string>& suite_check_names() {
  static const std::vector<std::string> names{"replication", "linear", "quadratic", "spectral",
                                              "symmetry", "w3", "gauge-constant", "gauge-scalar"};
  return names;
}

SuiteReport run_suite(const PsiSystem& sys, const std::vector<std::string>& names) {
  const auto& all = suite_check_names();
  for (const auto& n : names)
    if (std::find(all.begin(), all.end(), n) == all.end()) throw UnsupportedOperation("unknown check '" + n + "'");
  auto wanted = [&](const std::string& n) {
    return names.empty() || std::find(names.begin(), names.end(), n) != names.end();
  };
  const int d = sys.d();
  auto pts = regular_points(sys, 6);
  auto sp = [&](std::size_t i, int sheet) { return SheetPoint{Point::at(pts[i]), sheet % d}; };
  SuiteReport out;
  auto run = [&](const std::string& label, auto&& fn) {
    try {
      out.checks.push_back(fn());
    } catch (const Error& e) {
      out.checks.push_back(CheckReport{label, false, "", "", e.what()});
    }
  };
  if (wanted("replication")) {
    run("replication", [&] { return check_replication(sys, pts[0], pts[1], pts[2]); });
    run("replication", [&] { return check_replication(sys, pts[3], pts[4], pts[5]); });
  }
  if (wanted("linear"))
    for (int n = 1; n <= 4; ++n) {
      std::vector<SheetPoint> fixed;
      for (int i = 0; i < n - 1; ++i) fixed.push_back(sp(static_cast<std::size_t>(i), i + 1));
      run("linear n=" + std::to_string(n), [&] { return check_linear(sys, n, fixed); });
    }
  if (wanted("quadratic"))
    for (int n = 1; n <= 3; ++n) {
      std::vector<SheetPoint> fixed;
      for (int i = 0; i < n - 1; ++i) fixed.push_back(sp(static_cast<std::size_t>(i), i));
      run("quadratic n=" + std::to_string(n), [&] { return check_quadratic(sys, n, fixed); });
    }
  if (wanted("spectral")) {
    run("spectral", [&] { return check_spectral_identity(sys, pts[0]); });
    run("spectral", [&] { return check_spectral_identity(sys, pts[1]); });
  }
  if (wanted("symmetry"))
    for (std::size_t n = 2; n <= 4; ++n) {
      std::vector<SheetPoint> q;
      for (std::size_t i = 0; i < n; ++i) q.push_back(sp(i, static_cast<int>(i * 2 + 1)));
      run("symmetry n=" + std::to_string(n), [&] { return check_symmetry(sys, q); });
    }
  if (wanted("w3")) run("w3", [&] { return check_w3_regular(sys, 0, sp(0, 1), sp(1, 2)); });
  if (wanted("gauge-constant"))
    run("gauge-constant", [&] {
      Matrix<Rat> G(static_cast<std::size_t>(d), std::vector<Rat>(static_cast<std::size_t>(d)));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) G[i][j] = Rat(j == (i + 1) % d ? 2 : (j > i ? 1 : 0));
      return check_gauge_constant(sys, G);
    });
  if (wanted("gauge-scalar"))
    run("gauge-scalar", [&] {
      Poly g(std::vector<Rat>{Rat(1), Rat(0), Rat(1)}, "x");
      return check_gauge_scalar(sys, RatFunc(g)).report;
    });
  return out;
}

}  // namespace toprec::loopeq

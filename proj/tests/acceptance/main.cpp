// Acceptance suite: one PASS/FAIL line per criterion. Failing sub-checks are
// listed under their criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "reference.hpp"
#include "toprec/alg/diffpoly.hpp"
#include "toprec/errors.hpp"
#include "toprec/kp/free_energy.hpp"
#include "toprec/kp/lax.hpp"
#include "toprec/loopeq/checks.hpp"
#include "toprec/tr/correlator_table.hpp"

using namespace toprec;
using alg::PuiseuxSum;
using alg::Rat;
using alg::RatFunc;
using alg::XDiff;
using tr::TensorForm;

namespace {

class Criterion {
 public:
  void check(const std::string& what, bool ok, const std::string& detail = "") {
    ++total_;
    if (!ok) failures_.push_back(what + (detail.empty() ? "" : ": " + detail));
  }
  // Runs fn; an exception counts as a failed sub-check.
  void attempt(const std::string& what, const std::function<bool()>& fn) {
    try {
      check(what, fn());
    } catch (const std::exception& e) {
      check(what, false, e.what());
    }
  }
  bool pass() const { return failures_.empty(); }
  int total() const { return total_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int total_ = 0;
  std::vector<std::string> failures_;
};

// Tables shared between the correlator criteria and the invariant sweep.
struct Curves {
  std::unique_ptr<tr::CorrelatorTable> gravity, dual, ising;
  std::vector<std::pair<tr::CorrelatorTable*, std::pair<int, int>>> produced;

  tr::CorrelatorTable& table(std::unique_ptr<tr::CorrelatorTable>& t, int p, int q) {
    if (!t) t = std::make_unique<tr::CorrelatorTable>(kp::build_model_curve(kp::make_model(p, q)));
    return *t;
  }
  const TensorForm& omega(std::unique_ptr<tr::CorrelatorTable>& t, int p, int q, int g, int n) {
    auto& tab = table(t, p, q);
    const auto& f = tab.omega(g, n);
    std::pair<int, int> gn{g, n};
    bool seen = false;
    for (const auto& [tp, k] : produced) seen = seen || (tp == &tab && k == gn);
    if (!seen) produced.emplace_back(&tab, gn);
    return f;
  }
};

Curves& curves() {
  static Curves c;
  return c;
}

std::string shown(const RatFunc& f) { return f.str(); }

void criterion1(Criterion& c) {
  auto& cv = curves();
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {2, 1}, {3, 1}}) {
    std::string name = "(3,2) omega(" + std::to_string(g) + "," + std::to_string(n) + ")";
    c.attempt(name, [&] { return cv.omega(cv.gravity, 3, 2, g, n) == ref::pure_gravity(g, n); });
  }
}

void criterion2(Criterion& c) {
  auto& cv = curves();
  c.attempt("(2,3) omega(0,1)", [&] {
    return curve::omega01_as_ratfunc(cv.table(cv.dual, 2, 3).curve()) == ref::dual_w01();
  });
  c.attempt("(2,3) omega(0,3)", [&] { return cv.omega(cv.dual, 2, 3, 0, 3) == ref::dual_w03(); });
  c.attempt("(2,3) omega(1,1)", [&] { return ref::one_point(cv.omega(cv.dual, 2, 3, 1, 1)) == ref::dual_w11(); });
  c.attempt("(2,3) omega(2,1)", [&] { return ref::one_point(cv.omega(cv.dual, 2, 3, 2, 1)) == ref::dual_w21(); });
  c.attempt("(2,3) F1, F2 equal (3,2)", [&] {
    auto d = kp::make_model(2, 3), m = kp::make_model(3, 2);
    auto& td = cv.table(cv.dual, 2, 3);
    auto& tm = cv.table(cv.gravity, 3, 2);
    for (int g = 1; g <= 2; ++g)
      if (!(kp::free_energy(d, td, g) == kp::free_energy(m, tm, g))) return false;
    return true;
  });
}

void criterion3(Criterion& c) {
  auto& cv = curves();
  const std::vector<RatFunc> expect{ref::ising_w11(), ref::ising_w21(), ref::ising_w31()};
  for (int g = 1; g <= 3; ++g)
    c.attempt("(4,3) omega(" + std::to_string(g) + ",1)", [&] {
      RatFunc got = ref::one_point(cv.omega(cv.ising, 4, 3, g, 1));
      return got == expect[static_cast<std::size_t>(g - 1)];
    });
}

// t-space values converted with t = rho tau^e.
PuiseuxSum in_tau(const kp::PQModel& m, const ref::TValue& v) { return ref::to_tau(v, m.rho, m.time_exponent()); }
PuiseuxSum log_t(const kp::PQModel& m, const Rat& c) { return PuiseuxSum::log(c * m.time_exponent()); }

void criterion4(Criterion& c) {
  auto m = kp::make_model(3, 2);
  auto i = kp::make_model(4, 3);
  auto& cv = curves();
  auto& tm = cv.table(cv.gravity, 3, 2);
  auto& ti = cv.table(cv.ising, 4, 3);
  auto expect = [&](const std::string& name, const kp::PQModel& model, tr::CorrelatorTable& t, int g,
                    const PuiseuxSum& v) {
    c.attempt(name, [&] {
      auto got = kp::free_energy(model, t, g);
      if (got == v) return true;
      throw std::runtime_error(got.str() + " != " + v.str());
    });
  };
  expect("(3,2) F1", m, tm, 1, log_t(m, Rat(1, 48)));
  expect("(3,2) F2", m, tm, 2, in_tau(m, {Rat(-7, 640), {{3, Rat(-3, 2)}}, Rat(1), Rat(-5, 2)}));
  expect("(3,2) F3", m, tm, 3, in_tau(m, {Rat(-245, 4096 * 27), {}, Rat(1), Rat(-5)}));
  expect("(4,3) F1", i, ti, 1, log_t(i, Rat(1, 24)));
  expect("(4,3) F2", i, ti, 2, in_tau(i, {Rat(-55, 1296), {}, Rat(2), Rat(-7, 3)}));
  expect("(4,3) F3", i, ti, 3, in_tau(i, {Rat(-29975, 81648), {}, Rat(2), Rat(-14, 3)}));
}

void criterion5(Criterion& c) {
  auto& cv = curves();
  struct Case {
    int p, q;
    std::vector<ref::TValue> u;
    std::unique_ptr<tr::CorrelatorTable>* table;
  };
  std::vector<Case> cases;
  cases.push_back({3, 2,
                   {{Rat(1), {}, Rat(1, 3), Rat(1, 2)},
                    {Rat(-1, 48), {}, Rat(1), Rat(-2)},
                    {Rat(-49, 512), {{3, Rat(-3, 2)}}, Rat(1), Rat(-9, 2)},
                    {Rat(-1225, 2048 * 9), {}, Rat(1), Rat(-7)}},
                   &cv.gravity});
  cases.push_back({4, 3,
                   {{Rat(1, 2), {}, Rat(2), Rat(1, 3)},
                    {Rat(-1, 24), {}, Rat(1), Rat(-2)},
                    {Rat(-1925, 1458), {}, Rat(2), Rat(-13, 3)},
                    {Rat(-509575, 13122), {}, Rat(2), Rat(-20, 3)}},
                   &cv.ising});
  for (auto& k : cases) {
    auto m = kp::make_model(k.p, k.q);
    auto ss = kp::string_series(m, 3);
    for (int g = 0; g <= 3; ++g) {
      PuiseuxSum want = in_tau(m, k.u[static_cast<std::size_t>(g)]);
      c.check(m.name() + " u{" + std::to_string(g) + "}", ss.orders[static_cast<std::size_t>(g)] == want,
              ss.orders[static_cast<std::size_t>(g)].str() + " vs " + want.str());
    }
    c.attempt(m.name() + " tau cross-check g <= 3", [&] {
      auto fe = kp::free_energy_table(m, cv.table(*k.table, k.p, k.q), 3);
      return kp::tau_crosscheck(m, fe, ss, 3).g_checked == 4;
    });
  }
}

alg::Matrix<XDiff> parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  alg::Matrix<XDiff> m;
  for (const auto& r : rows) {
    std::vector<XDiff> row;
    for (const auto& e : r) row.push_back(alg::parse_xdiff(e));
    m.push_back(row);
  }
  return m;
}

std::string render(const alg::Matrix<XDiff>& m) {
  std::string s;
  for (const auto& row : m) {
    s += "[";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + row[j].str();
    s += "]";
  }
  return s;
}

void criterion6(Criterion& c) {
  for (Rat t1 : {Rat(0), Rat(5, 7)}) {
    auto lp = kp::build_lax(kp::make_model(3, 2, {{"t1", t1}}));
    std::string v = t1.str();
    auto L = parse_matrix({{"-1/2*hbar*u' - " + v, "-x+u"}, {"-(x-u)*(x+2*u) - 1/2*hbar^2*u''", "1/2*hbar*u' - " + v}});
    auto M = parse_matrix({{"0", "1"}, {"x+2*u", "0"}});
    c.check("(3,2) L at t1 = " + v, lp.L == L, render(lp.L));
    c.check("(3,2) M at t1 = " + v, lp.M == M, render(lp.M));
  }
  {
    auto lp = kp::build_lax(kp::make_model(4, 3));
    for (auto& row : lp.L)
      for (auto& e : row) {
        std::vector<alg::DiffPoly> k;
        for (const auto& a : e.coeffs()) k.push_back(a.substitute_constants({{"w", Rat(0)}}));
        e = XDiff(k);
      }
    auto L = parse_matrix({
        {"2*u^2 - 1/6*hbar^2*u''", "x + 1/2*hbar*u'", "-u"},
        {"-u*x + 5/2*hbar*u*u' - 1/6*hbar^3*u'''", "-u^2 + 1/3*hbar^2*u''", "x - 1/2*hbar*u'"},
        {"x^2 + hbar^2*(7/4*u'^2 + 5/2*u*u'') - 1/6*hbar^4*u''''", "2*u*x - hbar*u*u' + 1/6*hbar^3*u'''",
         "-u^2 - 1/6*hbar^2*u''"},
    });
    c.check("(4,3) L at t1 = t2 = t3 = w = 0", lp.L == L, "computed " + render(lp.L));
  }
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}}) {
    auto m = kp::make_model(p, q);
    c.attempt(m.name() + " Lax equation to hbar^2", [&] {
      kp::verify_lax(kp::build_lax(m), kp::string_series(m, 1), 2);
      return true;
    });
  }
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {4, 3}}) {
    auto m = kp::make_model(p, q);
    c.attempt(m.name() + " spectral determinant", [&] {
      kp::spectral_det_check(m);
      return true;
    });
  }
}

void criterion7(Criterion& c) {
  int systems = 0;
  for (int i = 0; i < 20; ++i) {
    int d = 1 + i % 4, deg = i % 3;
    std::uint64_t seed = 1001 + static_cast<std::uint64_t>(i);
    auto sys = loopeq::random_system(d, deg, seed);
    std::string tag = "system d=" + std::to_string(d) + " deg=" + std::to_string(deg) + " seed=" + std::to_string(seed);
    auto rep = loopeq::run_suite(sys);
    for (const auto& k : rep.checks) c.check(tag + " " + k.name, k.pass, k.detail);
    ++systems;

    auto pts = loopeq::regular_points(sys, 2);
    loopeq::SheetPoint y1{loopeq::Point::at(pts[0]), 0}, y2{loopeq::Point::at(pts[1]), d - 1};
    c.attempt(tag + " P3 anticommutator form", [&] { return loopeq::check_p3_anticommutator(sys, y1, y2).pass; });
    auto g = loopeq::check_gauge_scalar(sys, RatFunc(alg::Poly(std::vector<Rat>{1, 0, 1}, "x")));
    c.check(tag + " W1 invariant under scalar gauge (x^2+1)", g.w1_invariant,
            g.w1_shift_exact ? "W1 shifts by exactly -g'/g" : "W1 changes");
  }
  c.check("20 systems", systems == 20);
}

void criterion8(Criterion& c) {
  auto& cv = curves();
  if (cv.produced.empty()) {
    Criterion scratch;
    criterion1(scratch);
    criterion2(scratch);
    criterion3(scratch);
  }
  for (const auto& [table, gn] : cv.produced) {
    auto [g, n] = gn;
    const auto& f = table->omega(g, n);
    std::string tag = "X=" + table->curve().X.str() + " omega(" + std::to_string(g) + "," + std::to_string(n) + ")";
    c.attempt(tag + " symmetric", [&] { return tr::TensorForm::from_ordered(g, n, f.ordered()) == f; });
    c.attempt(tag + " antisymmetric at every ramification point, pole-free at infinity", [&] {
      table->check_form(f, table->initial_order(g, n) + 4);
      for (const auto& [rest, r] : f.first_slot_restrictions())
        if (r.order_at_infinity() < 2) throw UnexpectedPole("pole at infinity");
      return true;
    });
    c.attempt(tag + " truncation order +4 identical", [&] {
      tr::TruncationPolicy p = table->policy();
      p.base_extra += 4;
      p.verify = false;
      tr::CorrelatorTable again(table->curve(), p);
      return again.omega(g, n) == f;
    });
  }
}

struct Entry {
  const char* title;
  double limit_s;
  void (*run)(Criterion&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {"(3,2) correlators", 60, criterion1},
      {"(2,3) correlators and duality", 120, criterion2},
      {"(4,3) correlators", 600, criterion3},
      {"free energies", 600, criterion4},
      {"string-equation series and tau cross-check", 600, criterion5},
      {"Lax construction", 600, criterion6},
      {"loop-equation property suite", 300, criterion7},
      {"engine invariants", 600, criterion8},
  };
  return e;
}

bool run_one(int n) {
  const auto& e = entries()[static_cast<std::size_t>(n - 1)];
  Criterion c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    e.run(c);
  } catch (const std::exception& ex) {
    c.check("unexpected error", false, ex.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream secs;
  secs.precision(2);
  secs << std::fixed << s;
  c.check("runtime under " + std::to_string(static_cast<int>(e.limit_s)) + " s", s < e.limit_s, secs.str() + " s");
  std::cout << "criterion " << n << ": " << (c.pass() ? "PASS" : "FAIL") << "  " << e.title << " ("
            << c.total() - static_cast<int>(c.failures().size()) << "/" << c.total() << " checks, " << secs.str()
            << " s)\n";
  for (const auto& f : c.failures()) std::cout << "    FAIL " << f << "\n";
  std::cout.flush();
  return c.pass();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  int which = 0;
  app.add_option("--criterion", which, "run one criterion (1-8); all when omitted")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);
  bool ok = true;
  if (which) {
    ok = run_one(which);
  } else {
    for (int n = 1; n <= 8; ++n) ok = run_one(n) && ok;
  }
  return ok ? 0 : 1;
}

#include <fstream>
#include <set>

#include "toprec/alg/parser.hpp"
#include "toprec/cli/run.hpp"
#include "toprec/curve/spectral_curve.hpp"
#include "toprec/errors.hpp"
#include "toprec/kp/free_energy.hpp"
#include "toprec/kp/lax.hpp"
#include "toprec/kp/pq_model.hpp"
#include "toprec/kp/string_series.hpp"
#include "toprec/loopeq/checks.hpp"
#include "toprec/tr/correlator_table.hpp"

namespace toprec::cli {

using nlohmann::json;

namespace {

// What each check-failure kind asserts, for failure reports.
const std::map<std::string, std::string>& identity_names() {
  static const std::map<std::string, std::string> names{
      {"CompatibilityViolation", "Lax compatibility [M, L] = hbar dL/dt - hbar dM/dx"},
      {"TauMismatch", "hbar^2 d^2/dt^2 ln T = u"},
      {"CurveMismatch", "det(y - L(x)) proportional to Res_z(X(z) - x, Y(z) - y)"},
      {"IdentityViolation", "exact identity named in the message"},
      {"UnexpectedPole", "pole containment"},
      {"TruncationExhausted", "local expansion order budget"},
      {"DegenerateKernel", "recursion kernel regular at the ramification point"},
      {"SingularPsiAt", "Psi invertible at the sample point"}};
  return names;
}

bool is_config_kind(const std::string& kind) {
  static const std::set<std::string> kinds{
      "ConfigError",        "ParseError",        "UnsupportedModel", "UnsupportedOperation",
      "NotRegular",         "RamificationNotRational", "RamificationNotSimple", "DegenerateCurve",
      "NotHomogeneousPair", "VariableMismatch"};
  return kinds.count(kind) > 0;
}

json base(const RunConfig& cfg) { return {{"schema", kSchema}, {"command", command_name(cfg.command)}}; }

json rat_map(const std::map<std::string, alg::Rat>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v.str();
  return j;
}

json curve_json(const curve::SpectralCurve& c) {
  json r = json::array();
  for (const auto& a : c.ramification) r.push_back(a.str());
  return {{"x", c.X.str()}, {"y", c.Y.str()}, {"ramification", r}};
}

kp::PQModel model_of(const RunConfig& cfg) { return kp::make_model(cfg.model->p, cfg.model->q, cfg.model->constants); }

curve::SpectralCurve curve_of(const RunConfig& cfg, json& doc) {
  if (cfg.model) {
    auto m = model_of(cfg);
    doc["model"] = {{"p", m.p}, {"q", m.q}, {"constants", rat_map(m.constants)}};
    return kp::build_model_curve(m);
  }
  return curve::build_curve(alg::parse_poly(cfg.curve->x), alg::parse_poly(cfg.curve->y));
}

struct Outcome {
  json doc;
  std::string text;
  bool pass = true;
};

Outcome omegas(const RunConfig& cfg) {
  Outcome o{base(cfg), "", true};
  auto c = curve_of(cfg, o.doc);
  o.doc["curve"] = curve_json(c);
  o.text = "curve x = " + c.X.str() + ", y = " + c.Y.str() + "\n";
  std::vector<std::pair<int, int>> targets;
  if (cfg.g) {
    targets.emplace_back(*cfg.g, *cfg.n);
  } else {
    for (int g = 0; g <= cfg.g_max; ++g)
      for (int n = 1; n <= cfg.n_max; ++n)
        if (2 * g - 2 + n >= 1) targets.emplace_back(g, n);
  }
  tr::CorrelatorTable table(c);
  json forms = json::array();
  for (auto [g, n] : targets) {
    std::string label = "omega[g=" + std::to_string(g) + ",n=" + std::to_string(n) + "]";
    if (g == 0 && n == 1) {
      auto w = curve::omega01_as_ratfunc(c);
      forms.push_back({{"g", 0}, {"n", 1}, {"closed_form", w.str()}});
      o.text += label + " = (" + w.str() + ") dz\n";
    } else if (g == 0 && n == 2) {
      forms.push_back({{"g", 0}, {"n", 2}, {"closed_form", "1/(z1-z2)^2"}});
      o.text += label + " = dz1 dz2 / (z1-z2)^2\n";
    } else {
      const auto& f = table.omega(g, n);
      forms.push_back(tensor_form_json(f));
      o.text += label + " = " + tensor_form_text(f) + "\n";
    }
  }
  o.doc["forms"] = forms;
  return o;
}

Outcome pq_model(const RunConfig& cfg) {
  Outcome o{base(cfg), "", true};
  auto m = model_of(cfg);
  auto c = kp::build_model_curve(m);
  o.doc["model"] = {{"p", m.p}, {"q", m.q}, {"constants", rat_map(m.constants)}, {"rho", m.rho.str()},
                    {"time", "t = " + m.rho.str() + "*tau^" + m.time_exponent().str()}};
  o.doc["curve"] = curve_json(c);
  o.text = "model " + m.name() + ", rho = " + m.rho.str() + ", t = " + m.rho.str() + "*tau^" +
           m.time_exponent().str() + "\ncurve x = " + c.X.str() + ", y = " + c.Y.str() + "\n";
  if (m.has_operators()) {
    json Q = json::array(), P = json::array();
    for (const auto& u : m.u) Q.push_back(u.str());
    for (const auto& v : m.v) P.push_back(v.str());
    o.doc["Q"] = Q;
    o.doc["P"] = P;
    auto lp = kp::build_lax(m);
    auto mat = [&](const alg::Matrix<alg::XDiff>& a, const std::string& name) {
      json rows = json::array();
      for (const auto& row : a) {
        json r = json::array();
        std::string line;
        for (const auto& e : row) {
          r.push_back(e.str());
          line += (line.empty() ? "" : " | ") + e.str();
        }
        rows.push_back(r);
        o.text += name + ": " + line + "\n";
      }
      o.doc[name] = rows;
    };
    mat(lp.L, "L");
    mat(lp.M, "M");
  }
  if (m.string_equation) {
    o.doc["string_equation"] = m.string_equation->str() + " = t";
    o.text += "string equation: " + m.string_equation->str() + " = t\n";
  }
  return o;
}

Outcome string_series(const RunConfig& cfg) {
  Outcome o{base(cfg), "", true};
  auto m = model_of(cfg);
  auto ss = kp::string_series(m, cfg.g_max);
  json orders = json::array();
  o.text = "u = sum_g hbar^(2g) u^{g}(tau), t = " + m.rho.str() + "*tau^" + m.time_exponent().str() + "\n";
  for (int g = 0; g <= ss.g_max(); ++g) {
    const auto& u = ss.orders[static_cast<std::size_t>(g)];
    orders.push_back({{"g", g}, {"u", u.str()}});
    o.text += "u^{" + std::to_string(g) + "} = " + u.str() + "\n";
  }
  o.doc["model"] = {{"p", m.p}, {"q", m.q}, {"time", "t = " + m.rho.str() + "*tau^" + m.time_exponent().str()}};
  o.doc["orders"] = orders;
  return o;
}

json check_json(const std::string& name, bool pass, const std::string& detail) {
  return {{"name", name}, {"pass", pass}, {"detail", detail}};
}

Outcome free_energy(const RunConfig& cfg) {
  Outcome o{base(cfg), "", true};
  auto m = model_of(cfg);
  tr::CorrelatorTable table(kp::build_model_curve(m));
  auto fe = kp::free_energy_table(m, table, cfg.g_max);
  json F = json::array();
  o.text = "t = " + m.rho.str() + "*tau^" + m.time_exponent().str() + "\n";
  for (const auto& [g, f] : fe.F) {
    F.push_back({{"g", g}, {"F", f.str()}});
    o.text += "F^(" + std::to_string(g) + ") = " + f.str() + "\n";
  }
  o.doc["model"] = {{"p", m.p}, {"q", m.q}};
  o.doc["free_energy"] = F;
  json checks = json::array();
  bool zero_constants = true;
  for (const auto& [k, v] : m.constants) zero_constants = zero_constants && v.is_zero();
  if (m.string_equation && zero_constants) {
    auto ss = kp::string_series(m, cfg.g_max);
    kp::tau_crosscheck(m, fe, ss, cfg.g_max);
    checks.push_back(check_json("tau", true, "u^{g} = d^2/dt^2 F^(g) for g <= " + std::to_string(cfg.g_max)));
    o.text += "PASS tau: u^{g} = d^2/dt^2 F^(g) for g <= " + std::to_string(cfg.g_max) + "\n";
  }
  o.doc["checks"] = checks;
  return o;
}

Outcome lax(const RunConfig& cfg) {
  Outcome o{base(cfg), "", true};
  auto m = model_of(cfg);
  o.doc["model"] = {{"p", m.p}, {"q", m.q}, {"constants", rat_map(m.constants)}};
  json checks = json::array();
  auto record = [&](const std::string& name, auto&& fn) {
    try {
      std::string detail = fn();
      checks.push_back(check_json(name, true, detail));
      o.text += "PASS " + name + ": " + detail + "\n";
    } catch (const Error& e) {
      if (is_config_kind(e.kind())) throw;
      json c = check_json(name, false, e.what());
      c["kind"] = e.kind();
      c["identity"] = identity_names().count(e.kind()) ? identity_names().at(e.kind()) : e.kind();
      checks.push_back(c);
      o.text += "FAIL " + name + ": " + e.what() + "\n";
      o.pass = false;
    }
  };
  record("lax", [&] {
    auto lp = kp::build_lax(m);
    auto ss = kp::string_series(m, (cfg.hbar_order + 1) / 2);
    auto rep = kp::verify_lax(lp, ss, cfg.hbar_order);
    std::string xs;
    for (const auto& x : rep.x_samples) xs += (xs.empty() ? "" : ",") + x.str();
    return "Lax equation holds through hbar^" + std::to_string(rep.hbar_order + 1) + " at x in {" + xs + "}, " +
           std::to_string(rep.coefficients_checked) + " coefficients";
  });
  record("spectral", [&] {
    auto rep = kp::spectral_det_check(m);
    return "det(y - L) = " + rep.char_poly.str() + " = " + rep.ratio.str() + " * Res_z";
  });
  o.doc["checks"] = checks;
  return o;
}

Outcome verify_loopeq(const RunConfig& cfg) {
  Outcome o{base(cfg), "", true};
  const auto& l = cfg.loopeq;
  auto sys = loopeq::random_system(l.d, l.deg, l.seed, l.hbar);
  json psi = json::array();
  for (const auto& row : sys.psi()) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.str());
    psi.push_back(r);
  }
  o.doc["system"] = {{"d", l.d},     {"deg", l.deg}, {"seed", l.seed}, {"nonce", sys.nonce},
                     {"hbar", l.hbar.str()}, {"psi", psi}, {"det", sys.det().str()}};
  o.text = "system d=" + std::to_string(l.d) + " deg=" + std::to_string(l.deg) + " seed=" + std::to_string(l.seed) +
           " nonce=" + std::to_string(sys.nonce) + " hbar=" + l.hbar.str() + "\n";
  auto suite = loopeq::run_suite(sys, l.checks);
  json checks = json::array();
  for (const auto& c : suite.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"detail", c.detail}});
    o.text += std::string(c.pass ? "PASS " : "FAIL ") + c.name + (c.pass || c.detail.empty() ? "" : ": " + c.detail) + "\n";
  }
  o.doc["checks"] = checks;
  o.pass = suite.pass();
  o.text += std::string("result: ") + (o.pass ? "pass" : "fail") + " (" + std::to_string(suite.checks.size()) +
            " checks)\n";
  return o;
}

Outcome golden(const RunConfig& cfg) {
  Outcome o{base(cfg), "", true};
  auto rep = golden_compare(cfg.actual, cfg.expected);
  o.pass = rep.equal;
  o.doc["actual"] = cfg.actual;
  o.doc["expected"] = cfg.expected;
  o.doc["differences"] = rep.differences;
  o.text = rep.equal ? "golden match: " + cfg.actual + "\n" : "golden mismatch: " + cfg.actual + " vs " + cfg.expected + "\n";
  for (const auto& d : rep.differences) o.text += "  " + d + "\n";
  return o;
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (cfg.output.empty()) {
    out << body;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + cfg.output + "'");
  f << body;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    Outcome o;
    switch (cfg.command) {
      case Command::Omegas: o = omegas(cfg); break;
      case Command::FreeEnergy: o = free_energy(cfg); break;
      case Command::PqModel: o = pq_model(cfg); break;
      case Command::StringSeries: o = string_series(cfg); break;
      case Command::VerifyLoopeq: o = verify_loopeq(cfg); break;
      case Command::Lax: o = lax(cfg); break;
      case Command::GoldenCompare: o = golden(cfg); break;
    }
    o.doc["status"] = o.pass ? "pass" : "fail";
    if (cfg.command == Command::VerifyLoopeq && !cfg.loopeq.report.empty()) {
      std::ofstream f(cfg.loopeq.report, std::ios::binary);
      if (!f) throw ConfigError("cannot write '" + cfg.loopeq.report + "'");
      f << canonical(o.doc);
    }
    emit(cfg, cfg.format == Format::Json ? canonical(o.doc) : o.text, out);
    return o.pass ? 0 : 1;
  } catch (const Error& e) {
    const bool config = is_config_kind(e.kind());
    json doc = base(cfg);
    doc["status"] = config ? "config-error" : "fail";
    doc["failure"] = {{"kind", e.kind()}, {"message", e.what()}};
    if (identity_names().count(e.kind())) doc["failure"]["identity"] = identity_names().at(e.kind());
    err << (config ? "config error: " : "check failed: ") << e.what() << "\n";
    if (cfg.format == Format::Json) {
      try {
        emit(cfg, canonical(doc), out);
      } catch (const Error&) {
      }
    }
    return config ? 2 : 1;
  }
}

}  // namespace toprec::cli

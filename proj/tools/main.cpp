#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toprec/cli/run.hpp"
#include "toprec/cli/toml.hpp"
#include "toprec/errors.hpp"

using namespace toprec;
using namespace toprec::cli;

namespace {

struct Flags {
  std::string config, format, output, model, curve_x, curve_y, checks, report, hbar;
  int g = -1, n = -1, gmax = -1, nmax = -1, hbar_order = -1, d = -1, deg = -1;
  long long seed = -1;
  bool unsafe = false;
  std::vector<std::string> files;
};

void common(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "TOML run config");
  app->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--output", f.output, "write the result to a file");
  app->add_flag("--unsafe-limits", f.unsafe, "allow g > 4, n > 6");
}

void model_flags(CLI::App* app, Flags& f) { app->add_option("--model", f.model, "p,q"); }

RunConfig build(const Flags& f, const std::string& sub) {
  RunConfig cfg;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw ConfigError("cannot read config '" + f.config + "'");
    std::ostringstream s;
    s << in.rdbuf();
    apply_config(cfg, parse_toml(s.str()));
  }
  if (!sub.empty()) cfg.command = *command_from_name(sub);
  if (!f.format.empty()) cfg.format = f.format == "json" ? Format::Json : Format::Text;
  if (!f.output.empty()) cfg.output = f.output;
  if (f.unsafe) cfg.unsafe_limits = true;
  if (!f.model.empty()) {
    cfg.model = parse_model_flag(f.model);
    cfg.curve.reset();
  }
  if (!f.curve_x.empty() || !f.curve_y.empty()) {
    cfg.curve = CurveSpec{f.curve_x, f.curve_y};
    cfg.model.reset();
  }
  if (f.g >= 0) cfg.g = f.g;
  if (f.n >= 0) cfg.n = f.n;
  if (f.gmax >= 0) cfg.g_max = f.gmax;
  if (f.nmax >= 0) cfg.n_max = f.nmax;
  if (f.hbar_order >= 0) cfg.hbar_order = f.hbar_order;
  if (f.d >= 0) cfg.loopeq.d = f.d;
  if (f.deg >= 0) cfg.loopeq.deg = f.deg;
  if (f.seed >= 0) cfg.loopeq.seed = static_cast<std::uint64_t>(f.seed);
  if (!f.hbar.empty()) {
    try {
      cfg.loopeq.hbar = alg::Rat::parse(f.hbar);
    } catch (const ParseError& e) {
      throw ConfigError(std::string("--hbar: ") + e.what());
    }
  }
  if (!f.checks.empty()) {
    cfg.loopeq.checks.clear();
    std::stringstream s(f.checks);
    for (std::string c; std::getline(s, c, ',');)
      if (!c.empty()) cfg.loopeq.checks.push_back(c);
  }
  if (!f.report.empty()) cfg.loopeq.report = f.report;
  if (f.files.size() == 2) {
    cfg.actual = f.files[0];
    cfg.expected = f.files[1];
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toprec: topological recursion, (p,q) models and loop equations in exact arithmetic"};
  Flags f;
  common(&app, f);

  auto* om = app.add_subcommand("omegas", "correlators omega_n^(g) of a spectral curve");
  common(om, f);
  model_flags(om, f);
  om->add_option("--curve-x", f.curve_x, "X(z)");
  om->add_option("--curve-y", f.curve_y, "Y(z)");
  om->add_option("--g", f.g, "single genus");
  om->add_option("--n", f.n, "single arity");
  om->add_option("--gmax", f.gmax, "all genera up to gmax");
  om->add_option("--nmax", f.nmax, "all arities up to nmax");

  auto* fe = app.add_subcommand("free-energy", "F^(g) of a (p,q) model with the tau cross-check");
  common(fe, f);
  model_flags(fe, f);
  fe->add_option("--gmax", f.gmax, "highest genus");

  auto* pq = app.add_subcommand("pq-model", "operators, curve and Lax matrices of a (p,q) model");
  common(pq, f);
  model_flags(pq, f);

  auto* ss = app.add_subcommand("string-series", "hbar expansion of the string equation");
  common(ss, f);
  model_flags(ss, f);
  ss->add_option("--gmax", f.gmax, "highest order hbar^(2 gmax)");

  auto* lx = app.add_subcommand("lax", "Lax equation and spectral determinant checks");
  common(lx, f);
  model_flags(lx, f);
  lx->add_option("--hbar-order", f.hbar_order, "series order for the Lax check");

  auto* lq = app.add_subcommand("verify-loopeq", "loop-equation identities on a seeded system");
  common(lq, f);
  lq->add_option("--d", f.d, "dimension");
  lq->add_option("--deg", f.deg, "entry degree");
  lq->add_option("--seed", f.seed, "generator seed");
  lq->add_option("--hbar", f.hbar, "nonzero rational");
  lq->add_option("--checks", f.checks, "comma list of checks");
  lq->add_option("--report", f.report, "JSON report path");

  auto* gc = app.add_subcommand("golden-compare", "compare two outputs after canonicalization");
  common(gc, f);
  gc->add_option("files", f.files, "actual expected")->expected(2)->required();

  app.require_subcommand(0, 1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  std::string sub;
  for (auto* s : app.get_subcommands()) sub = s->get_name();
  if (sub.empty() && f.config.empty()) {
    std::cout << app.help();
    return 2;
  }
  RunConfig cfg;
  try {
    cfg = build(f, sub);
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  return run(cfg, std::cout, std::cerr);
}

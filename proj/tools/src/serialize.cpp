#include <fstream>
#include <sstream>

#include "toprec/cli/run.hpp"
#include "toprec/errors.hpp"

namespace toprec::cli {

using nlohmann::json;

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

json tensor_form_json(const tr::TensorForm& f) {
  json terms = json::array();
  for (const auto& [tuple, c] : f.terms()) {
    json poles = json::array();
    for (const auto& p : tuple) poles.push_back({{"r", p.r.str()}, {"k", p.k}});
    terms.push_back({{"coeff", c.str()}, {"poles", poles}});
  }
  return {{"g", f.g()}, {"n", f.n()}, {"terms", terms}};
}

namespace {

std::string pole_text(const tr::Pole& p) {
  std::string base;
  if (p.r.is_zero()) base = "z";
  else if (p.r.sign() > 0) base = "(z-" + p.r.str() + ")";
  else base = "(z+" + (-p.r).str() + ")";
  return base + "^-" + std::to_string(p.k);
}

}  // namespace

std::string tensor_form_text(const tr::TensorForm& f) {
  std::string out;
  for (const auto& [tuple, c] : f.terms()) {
    std::string slots;
    for (const auto& p : tuple) slots += (slots.empty() ? "" : " x ") + pole_text(p);
    if (!out.empty()) out += " + ";
    out += c.str() + " * " + (tuple.size() > 1 ? "sym[" + slots + "]" : slots);
  }
  return out.empty() ? "0" : out;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

GoldenReport golden_compare(const std::string& actual, const std::string& expected) {
  const std::string a = read_file(actual), e = read_file(expected);
  GoldenReport rep;
  json ja = json::parse(a, nullptr, false), je = json::parse(e, nullptr, false);
  if (ja.is_discarded() || je.is_discarded()) {
    rep.equal = a == e;
    if (!rep.equal) rep.differences.push_back("files differ (not JSON; compared byte for byte)");
    return rep;
  }
  rep.equal = canonical(ja) == canonical(je);
  if (!rep.equal)
    for (const auto& op : json::diff(je, ja)) {
      std::string line = op["op"].get<std::string>() + " " + op["path"].get<std::string>();
      if (op.contains("value")) line += ": " + op["value"].dump();
      rep.differences.push_back(line);
    }
  return rep;
}

}  // namespace toprec::cli

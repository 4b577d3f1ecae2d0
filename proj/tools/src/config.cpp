#include <regex>

#include "toprec/cli/run.hpp"
#include "toprec/errors.hpp"

namespace toprec::cli {

using nlohmann::json;

namespace {

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names{
      {"omegas", Command::Omegas},         {"free-energy", Command::FreeEnergy},
      {"pq-model", Command::PqModel},      {"string-series", Command::StringSeries},
      {"verify-loopeq", Command::VerifyLoopeq}, {"lax", Command::Lax},
      {"golden-compare", Command::GoldenCompare}};
  return names;
}

int as_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
  return v.get<int>();
}

std::string as_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError("'" + key + "' must be a string");
  return v.get<std::string>();
}

alg::Rat as_rat(const json& v, const std::string& key) {
  if (v.is_number_integer()) return alg::Rat(v.get<long>());
  try {
    return alg::Rat::parse(as_string(v, key));
  } catch (const ParseError& e) {
    throw ConfigError("'" + key + "': " + e.what());
  }
}

void unknown(const std::string& key) { throw ConfigError("unknown config key '" + key + "'"); }

}  // namespace

std::optional<Command> command_from_name(const std::string& name) {
  auto it = command_names().find(name);
  if (it == command_names().end()) return std::nullopt;
  return it->second;
}

std::string command_name(Command c) {
  for (const auto& [k, v] : command_names())
    if (v == c) return k;
  return "?";
}

ModelSpec parse_model_flag(const std::string& text) {
  static const std::regex re(R"(\s*(\d+)\s*,\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ConfigError("model must be written p,q (got '" + text + "')");
  return ModelSpec{std::stoi(m[1]), std::stoi(m[2]), {}};
}

void apply_config(RunConfig& cfg, const json& doc) {
  if (!doc.is_object()) throw ConfigError("config root must be a table");
  for (const auto& [key, v] : doc.items()) {
    if (key == "command") {
      auto c = command_from_name(as_string(v, key));
      if (!c) throw ConfigError("unknown command '" + v.get<std::string>() + "'");
      cfg.command = *c;
    } else if (key == "g_max") {
      cfg.g_max = as_int(v, key);
    } else if (key == "n_max") {
      cfg.n_max = as_int(v, key);
    } else if (key == "g") {
      cfg.g = as_int(v, key);
    } else if (key == "n") {
      cfg.n = as_int(v, key);
    } else if (key == "hbar_order") {
      cfg.hbar_order = as_int(v, key);
    } else if (key == "output") {
      cfg.output = as_string(v, key);
    } else if (key == "unsafe_limits") {
      if (!v.is_boolean()) throw ConfigError("'unsafe_limits' must be a boolean");
      cfg.unsafe_limits = v.get<bool>();
    } else if (key == "format") {
      std::string f = as_string(v, key);
      if (f == "text") cfg.format = Format::Text;
      else if (f == "json") cfg.format = Format::Json;
      else throw ConfigError("format must be text or json");
    } else if (key == "curve") {
      if (!v.is_object()) throw ConfigError("[curve] must be a table");
      CurveSpec c;
      for (const auto& [k, w] : v.items()) {
        if (k == "x") c.x = as_string(w, "curve.x");
        else if (k == "y") c.y = as_string(w, "curve.y");
        else unknown("curve." + k);
      }
      cfg.curve = c;
    } else if (key == "model") {
      if (!v.is_object()) throw ConfigError("[model] must be a table");
      ModelSpec m;
      for (const auto& [k, w] : v.items()) {
        if (k == "p") m.p = as_int(w, "model.p");
        else if (k == "q") m.q = as_int(w, "model.q");
        else if (k == "constants") {
          if (!w.is_object()) throw ConfigError("model.constants must be an inline table");
          for (const auto& [name, c] : w.items()) m.constants[name] = as_rat(c, "model.constants." + name);
        } else unknown("model." + k);
      }
      cfg.model = m;
    } else if (key == "loopeq") {
      if (!v.is_object()) throw ConfigError("[loopeq] must be a table");
      for (const auto& [k, w] : v.items()) {
        if (k == "d") cfg.loopeq.d = as_int(w, "loopeq.d");
        else if (k == "deg") cfg.loopeq.deg = as_int(w, "loopeq.deg");
        else if (k == "seed") {
          if (!w.is_number_integer() || w.get<long long>() < 0) throw ConfigError("loopeq.seed must be a nonnegative integer");
          cfg.loopeq.seed = w.get<std::uint64_t>();
        } else if (k == "hbar") cfg.loopeq.hbar = as_rat(w, "loopeq.hbar");
        else if (k == "report") cfg.loopeq.report = as_string(w, "loopeq.report");
        else if (k == "checks") {
          if (!w.is_array()) throw ConfigError("loopeq.checks must be an array of strings");
          cfg.loopeq.checks.clear();
          for (const auto& c : w) cfg.loopeq.checks.push_back(as_string(c, "loopeq.checks"));
        } else unknown("loopeq." + k);
      }
    } else {
      unknown(key);
    }
  }
}

void validate(const RunConfig& cfg) {
  auto limit = [&](const char* name, int value, int lo, int hi) {
    if (value < lo) throw ConfigError(std::string(name) + " must be >= " + std::to_string(lo));
    if (value > hi && !cfg.unsafe_limits)
      throw ConfigError(std::string(name) + " = " + std::to_string(value) + " exceeds the limit " +
                        std::to_string(hi) + " (pass --unsafe-limits to override)");
  };
  limit("g_max", cfg.g_max, 0, 4);
  limit("n_max", cfg.n_max, 1, 6);
  if (cfg.g) limit("g", *cfg.g, 0, 4);
  if (cfg.n) limit("n", *cfg.n, 1, 6);
  if (cfg.g.has_value() != cfg.n.has_value()) throw ConfigError("--g and --n must be given together");
  if (cfg.model && cfg.curve) throw ConfigError("give either a model or a curve, not both");
  switch (cfg.command) {
    case Command::Omegas:
      if (!cfg.model && !cfg.curve) throw ConfigError("omegas needs --model or --curve-x/--curve-y");
      if (cfg.curve && (cfg.curve->x.empty() || cfg.curve->y.empty())) throw ConfigError("curve needs both x and y");
      break;
    case Command::FreeEnergy:
    case Command::PqModel:
    case Command::StringSeries:
    case Command::Lax:
      if (!cfg.model) throw ConfigError(command_name(cfg.command) + " needs --model p,q");
      break;
    case Command::VerifyLoopeq:
      limit("d", cfg.loopeq.d, 1, 4);
      limit("deg", cfg.loopeq.deg, 0, 3);
      if (cfg.loopeq.hbar.is_zero()) throw ConfigError("hbar must be nonzero");
      break;
    case Command::GoldenCompare:
      if (cfg.actual.empty() || cfg.expected.empty()) throw ConfigError("golden-compare needs two files");
      break;
  }
  if (cfg.command == Command::Lax) limit("hbar_order", cfg.hbar_order, 0, 8);
}

}  // namespace toprec::cli

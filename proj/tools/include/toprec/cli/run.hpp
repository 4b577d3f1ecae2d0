#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "toprec/alg/rat.hpp"
#include "toprec/tr/tensor_form.hpp"

namespace toprec::cli {

inline constexpr const char* kSchema = "toprec-kp/1";

enum class Command { Omegas, FreeEnergy, PqModel, StringSeries, VerifyLoopeq, Lax, GoldenCompare };
enum class Format { Text, Json };

std::optional<Command> command_from_name(const std::string& name);
std::string command_name(Command c);

struct ModelSpec {
  int p = 0;
  int q = 0;
  std::map<std::string, alg::Rat> constants;
};

struct CurveSpec {
  std::string x;
  std::string y;
};

struct LoopeqSpec {
  int d = 3;
  int deg = 2;
  std::uint64_t seed = 7;
  alg::Rat hbar = alg::Rat(1);
  std::vector<std::string> checks;  // empty: all
  std::string report;               // extra JSON report path
};

struct RunConfig {
  Command command = Command::Omegas;
  std::optional<ModelSpec> model;
  std::optional<CurveSpec> curve;
  std::optional<int> g;
  std::optional<int> n;
  int g_max = 1;
  int n_max = 1;
  int hbar_order = 2;
  std::string output;
  Format format = Format::Text;
  bool unsafe_limits = false;
  LoopeqSpec loopeq;
  std::string actual;    // golden-compare
  std::string expected;  // golden-compare
};

/// "3,2" -> p = 3, q = 2.
ModelSpec parse_model_flag(const std::string& text);

/// Overlays a config file tree (parse_toml output) onto cfg; unknown keys
/// and ill-typed values throw ConfigError.
void apply_config(RunConfig& cfg, const nlohmann::json& doc);

/// Limits (g <= 4, n <= 6 unless unsafe_limits) and required inputs.
void validate(const RunConfig& cfg);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical(const nlohmann::json& j);

nlohmann::json tensor_form_json(const tr::TensorForm& f);
/// e.g. "-1/144 * 1/(z1)^2 + ..." with each slot carrying an implicit dz_i.
std::string tensor_form_text(const tr::TensorForm& f);

struct GoldenReport {
  bool equal = false;
  std::vector<std::string> differences;
};
/// Compares two files after canonical JSON re-serialization (byte-exact for
/// non-JSON files). Throws ConfigError when a file cannot be read.
GoldenReport golden_compare(const std::string& actual, const std::string& expected);

/// Runs the command. Exit codes: 0 all checks pass, 1 identity or check
/// failure (a structured report is emitted), 2 configuration error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace toprec::cli

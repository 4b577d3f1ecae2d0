#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "toprec/cli/run.hpp"
#include "toprec/cli/toml.hpp"
#include "toprec/errors.hpp"

using namespace toprec;
using namespace toprec::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result exec(const RunConfig& cfg) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig json_cfg(Command c) {
  RunConfig cfg;
  cfg.command = c;
  cfg.format = Format::Json;
  return cfg;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("toprec_test_" + name);
  std::ofstream(p, std::ios::binary) << content;
  return p.string();
}

}  // namespace

TEST_CASE("toml: tables, arrays and inline tables") {
  auto j = parse_toml(R"(
# run config
command = "omegas"
g_max = 2
unsafe_limits = false

[model]
p = 3
q = 2
constants = { t1 = "5/7" }

[loopeq]
checks = ["linear", 'quadratic']
a.b = 1
)");
  CHECK(j["command"] == "omegas");
  CHECK(j["g_max"] == 2);
  CHECK(j["unsafe_limits"] == false);
  CHECK(j["model"]["constants"]["t1"] == "5/7");
  CHECK(j["loopeq"]["checks"] == json::array({"linear", "quadratic"}));
  CHECK(j["loopeq"]["a"]["b"] == 1);
}

TEST_CASE("toml: rejected input") {
  CHECK_THROWS_AS(parse_toml("x = 1.5"), ConfigError);
  CHECK_THROWS_AS(parse_toml("x = 1\nx = 2"), ConfigError);
  CHECK_THROWS_AS(parse_toml("[a]\n[a]"), ConfigError);
  CHECK_THROWS_AS(parse_toml("x = \"open"), ConfigError);
  try {
    parse_toml("a = 1\nb = = 2");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("config: overlay and validation") {
  RunConfig cfg;
  apply_config(cfg, parse_toml("command = \"free-energy\"\ng_max = 3\n[model]\np = 4\nq = 3\n"));
  CHECK(cfg.command == Command::FreeEnergy);
  CHECK(cfg.g_max == 3);
  REQUIRE(cfg.model);
  CHECK(cfg.model->p == 4);
  CHECK_NOTHROW(validate(cfg));
  CHECK_THROWS_AS(apply_config(cfg, parse_toml("bogus = 1")), ConfigError);
  CHECK_THROWS_AS(apply_config(cfg, parse_toml("g_max = \"two\"")), ConfigError);
  cfg.g_max = 5;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.unsafe_limits = true;
  CHECK_NOTHROW(validate(cfg));

  RunConfig lp;
  lp.command = Command::VerifyLoopeq;
  lp.loopeq.d = 5;
  CHECK_THROWS_AS(validate(lp), ConfigError);
  CHECK(parse_model_flag("4,3").q == 3);
  CHECK_THROWS_AS(parse_model_flag("4"), ConfigError);
}

TEST_CASE("omegas: pure gravity one-point genus-one form") {
  auto cfg = json_cfg(Command::Omegas);
  cfg.model = parse_model_flag("3,2");
  cfg.g = 1;
  cfg.n = 1;
  auto r = exec(cfg);
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == kSchema);
  CHECK(j["status"] == "pass");
  auto terms = j["forms"][0]["terms"];
  REQUIRE(terms.size() == 2);
  CHECK(terms[0]["coeff"] == "-1/144");
  CHECK(terms[0]["poles"][0]["k"] == 2);
  CHECK(terms[1]["coeff"] == "-1/48");
  CHECK(terms[1]["poles"][0]["k"] == 4);
  CHECK(exec(cfg).out == r.out);
}

TEST_CASE("exit codes") {
  auto cfg = json_cfg(Command::Omegas);
  cfg.model = parse_model_flag("3,2");
  cfg.g = 5;
  cfg.n = 1;
  auto r = exec(cfg);
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["status"] == "config-error");

  auto bad = json_cfg(Command::PqModel);
  bad.model = parse_model_flag("5,2");
  CHECK(exec(bad).code == 2);

  auto curve = json_cfg(Command::Omegas);
  curve.curve = CurveSpec{"z^3-2*z", "z^2"};
  curve.g = 0;
  curve.n = 3;
  CHECK(exec(curve).code == 2);

  auto lax = json_cfg(Command::Lax);
  lax.model = parse_model_flag("4,3");
  auto lr = exec(lax);
  CHECK(lr.code == 1);
  CHECK(json::parse(lr.out)["status"] == "fail");

  auto ok = json_cfg(Command::Lax);
  ok.model = parse_model_flag("3,2");
  CHECK(exec(ok).code == 0);

  auto le = json_cfg(Command::VerifyLoopeq);
  le.loopeq.d = 2;
  le.loopeq.deg = 1;
  le.loopeq.seed = 3;
  le.loopeq.checks = {"replication", "linear"};
  auto lj = exec(le);
  CHECK(lj.code == 0);
  CHECK(json::parse(lj.out)["checks"].size() >= 2);
}

TEST_CASE("failure reports name the identity") {
  auto cfg = json_cfg(Command::Lax);
  cfg.model = parse_model_flag("2,3");
  auto r = exec(cfg);
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  bool found = false;
  for (const auto& c : j["checks"])
    if (c["pass"] == false) {
      found = true;
      CHECK(c["kind"] == "CompatibilityViolation");
      CHECK(c.contains("identity"));
    }
  CHECK(found);
}

TEST_CASE("golden compare") {
  auto a = temp_file("a.json", R"({"b": 1, "a": {"y": "1/2", "x": [1, 2]}})");
  auto b = temp_file("b.json", R"({"a": {"x": [1, 2], "y": "1/2"}, "b": 1})");
  auto c = temp_file("c.json", R"({"a": {"x": [1, 3], "y": "1/2"}, "b": 1})");
  CHECK(golden_compare(a, b).equal);
  auto d = golden_compare(a, c);
  CHECK_FALSE(d.equal);
  REQUIRE_FALSE(d.differences.empty());
  CHECK(d.differences[0].find("/a/x/1") != std::string::npos);
  auto t1 = temp_file("t1.txt", "abc\n");
  auto t2 = temp_file("t2.txt", "abd\n");
  CHECK(golden_compare(t1, t1).equal);
  CHECK_FALSE(golden_compare(t1, t2).equal);
  CHECK_THROWS_AS(golden_compare(a, "/nonexistent/file.json"), ConfigError);

  auto cfg = json_cfg(Command::GoldenCompare);
  cfg.actual = a;
  cfg.expected = c;
  CHECK(exec(cfg).code == 1);
  cfg.expected = b;
  CHECK(exec(cfg).code == 0);
}

TEST_CASE("canonical serialization") {
  json j = {{"z", 1}, {"a", {{"c", "1/3"}, {"b", true}}}};
  CHECK(canonical(j) == "{\n  \"a\": {\n    \"b\": true,\n    \"c\": \"1/3\"\n  },\n  \"z\": 1\n}\n");
}

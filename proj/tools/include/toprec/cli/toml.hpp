#pragma once

#include <string>

#include <json.hpp>

namespace toprec::cli {

/// Reads the TOML subset used by run configs into a JSON tree: tables and
/// dotted headers, bare/quoted/dotted keys, basic and literal strings,
/// integers, booleans, single-line arrays and inline tables. Floats are
/// rejected (rationals go in strings). Throws ConfigError with a line number.
nlohmann::json parse_toml(const std::string& text);

}  // namespace toprec::cli

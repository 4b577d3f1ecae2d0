#include "toprec/cli/toml.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "toprec/errors.hpp"

namespace toprec::cli {

namespace {

using nlohmann::json;

class LineParser {
 public:
  LineParser(const std::string& s, int line) : s_(s), line_(line) {}

  [[noreturn]] void error(const std::string& what) const {
    throw ConfigError("line " + std::to_string(line_) + ": " + what);
  }

  void ws() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
  }
  bool done() {
    ws();
    return i_ >= s_.size() || s_[i_] == '#';
  }
  bool eat(char c) {
    ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }

  std::vector<std::string> key() {
    std::vector<std::string> parts;
    do {
      ws();
      if (i_ < s_.size() && (s_[i_] == '"' || s_[i_] == '\'')) {
        parts.push_back(string());
        continue;
      }
      std::size_t b = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '-'))
        ++i_;
      if (b == i_) error("expected a key");
      parts.push_back(s_.substr(b, i_ - b));
    } while (eat('.'));
    return parts;
  }

  std::string string() {
    char q = s_[i_++];
    std::string out;
    while (i_ < s_.size() && s_[i_] != q) {
      char c = s_[i_++];
      if (q == '"' && c == '\\') {
        if (i_ >= s_.size()) break;
        char e = s_[i_++];
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: error(std::string("unsupported escape \\") + e);
        }
      } else {
        out += c;
      }
    }
    if (i_ >= s_.size()) error("unterminated string");
    ++i_;
    return out;
  }

  json value() {
    ws();
    if (i_ >= s_.size()) error("missing value");
    char c = s_[i_];
    if (c == '"' || c == '\'') return string();
    if (c == '[') {
      ++i_;
      json arr = json::array();
      if (eat(']')) return arr;
      do {
        if (eat(']')) return arr;  // trailing comma
        arr.push_back(value());
      } while (eat(','));
      expect(']');
      return arr;
    }
    if (c == '{') {
      ++i_;
      json obj = json::object();
      if (eat('}')) return obj;
      do {
        auto k = key();
        expect('=');
        assign(obj, k, value());
      } while (eat(','));
      expect('}');
      return obj;
    }
    std::size_t b = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != ',' && s_[i_] != ']' &&
           s_[i_] != '}' && s_[i_] != '#')
      ++i_;
    std::string tok = s_.substr(b, i_ - b);
    if (tok == "true") return true;
    if (tok == "false") return false;
    std::string digits;
    for (char ch : tok)
      if (ch != '_') digits += ch;
    std::size_t k = (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) ? 1 : 0;
    bool integer = digits.size() > k;
    for (std::size_t j = k; j < digits.size(); ++j) integer = integer && std::isdigit(static_cast<unsigned char>(digits[j]));
    if (!integer) error("unsupported value '" + tok + "' (floats must be written as \"p/q\" strings)");
    try {
      return std::stoll(digits);
    } catch (const std::exception&) {
      error("integer out of range: " + tok);
    }
  }

  void assign(json& table, const std::vector<std::string>& k, json v) {
    json* t = &table;
    for (std::size_t j = 0; j + 1 < k.size(); ++j) {
      json& next = (*t)[k[j]];
      if (next.is_null()) next = json::object();
      if (!next.is_object()) error("key '" + k[j] + "' is not a table");
      t = &next;
    }
    if (t->contains(k.back())) error("duplicate key '" + k.back() + "'");
    (*t)[k.back()] = std::move(v);
  }

  std::size_t pos() const { return i_; }

 private:
  const std::string& s_;
  int line_;
  std::size_t i_ = 0;
};

}  // namespace

nlohmann::json parse_toml(const std::string& text) {
  json root = json::object();
  json* current = &root;
  std::set<std::string> headers;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    LineParser p(line, no);
    if (p.done()) continue;
    if (p.eat('[')) {
      if (p.eat('[')) p.error("arrays of tables are not supported");
      auto k = p.key();
      p.expect(']');
      if (!p.done()) p.error("trailing characters after table header");
      std::string path;
      for (const auto& part : k) path += part + '.';
      if (!headers.insert(path).second) p.error("table [" + path.substr(0, path.size() - 1) + "] defined twice");
      current = &root;
      for (const auto& part : k) {
        json& next = (*current)[part];
        if (next.is_null()) next = json::object();
        if (!next.is_object()) p.error("'" + part + "' is not a table");
        current = &next;
      }
      continue;
    }
    auto k = p.key();
    p.expect('=');
    json v = p.value();
    if (!p.done()) p.error("trailing characters after value");
    p.assign(*current, k, std::move(v));
  }
  return root;
}

}  // namespace toprec::cli

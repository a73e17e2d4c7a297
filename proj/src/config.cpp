#include "stabwalls/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace stabwalls {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& v, int line) {
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) return v.substr(1, v.size() - 2);
  if (!v.empty() && (v.front() == '"' || v.front() == '\'')) {
    throw ParseError("config line " + std::to_string(line) + ": unterminated string");
  }
  return v;
}

}  // namespace

Config parse_config(const std::string& text, Config cfg) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    // Comments only start outside quotes; values never contain '#'.
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    if (s.front() == '[') throw ParseError("config line " + std::to_string(line) + ": tables are not supported");
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(line) + ": expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string val = unquote(trim(s.substr(eq + 1)), line);
    try {
      if (key == "s") {
        cfg.s = parse_rational(val);
      } else if (key == "tolerance") {
        cfg.tolerance = parse_rational(val);
      } else if (key == "rank_bound") {
        Rational r = parse_rational(val);
        if (!is_integer(r)) throw ParseError("rank_bound must be an integer");
        cfg.rank_bound = r.get_num().get_si();
      } else {
        throw ParseError("unknown key '" + key + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError("config line " + std::to_string(line) + ": " + e.what());
    }
  }
  if (sgn(cfg.s) <= 0) throw ParseError("config: s must be positive");
  if (sgn(cfg.tolerance) <= 0) throw ParseError("config: tolerance must be positive");
  if (cfg.rank_bound < 0) throw ParseError("config: rank_bound must be nonnegative");
  return cfg;
}

Config load_config_file(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

Config config_from_env() {
  const char* path = std::getenv("STABWALLS_CONFIG");
  if (path == nullptr || *path == '\0') return {};
  return load_config_file(path);
}

}  // namespace stabwalls

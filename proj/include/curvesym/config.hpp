//
// config.hpp: plain-text run configuration. One `key = value` per line,
// `#` starts a comment. Command-line options override file values, and the
// resolved configuration is echoed into the report header.
//
#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "curvesym/report.hpp"

namespace curvesym {

using KeyValues = std::map<std::string, std::string>;

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline KeyValues parse_key_values(std::istream& is) {
  KeyValues kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    }
    kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return kv;
}

inline KeyValues load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file '" + path + "'");
  return parse_key_values(f);
}

// file values first, overrides win
inline KeyValues merge_config(const KeyValues& file, const KeyValues& overrides) {
  KeyValues out = file;
  for (const auto& [k, v] : overrides) out[k] = v;
  return out;
}

inline std::string config_echo_json(const KeyValues& kv) {
  JsonLine line;
  std::string body;
  for (const auto& [k, v] : kv) {
    if (!body.empty()) body += ',';
    body += '"' + json_escape(k) + "\":\"" + json_escape(v) + '"';
  }
  line.raw("config", "{" + body + "}");
  return line.str();
}

}  // namespace curvesym

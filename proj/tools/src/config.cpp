#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gaussq::cli {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long to_long(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long out = 0;
  try {
    out = std::stol(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw ConfigError("config: " + key + " expects an integer, got '" + v + "'");
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw ConfigError("config: " + key + " expects a number, got '" + v + "'");
  return out;
}

}  // namespace

Config parse_config(std::string_view text) {
  Config cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "max_k") {
      cfg.max_k = static_cast<int>(to_long(key, value));
    } else if (key == "order") {
      cfg.reconstruct.order = to_long(key, value);
    } else if (key == "margin") {
      cfg.reconstruct.margin = to_long(key, value);
    } else if (key == "ansatz_max_m") {
      cfg.reconstruct.bounds.max_m = static_cast<int>(to_long(key, value));
    } else if (key == "ansatz_max_exponent") {
      cfg.reconstruct.bounds.max_exponent = static_cast<int>(to_long(key, value));
    } else if (key == "recognition_limit") {
      cfg.reconstruct.bounds.recognition_limit = static_cast<int>(to_long(key, value));
    } else if (key == "tol_coeff_small_k") {
      cfg.tolerances.coeff_small_k = to_double(key, value);
    } else if (key == "tol_coeff") {
      cfg.tolerances.coeff = to_double(key, value);
    } else if (key == "tol_diff") {
      cfg.tolerances.diff = to_double(key, value);
    } else if (key == "growth_factor") {
      cfg.tolerances.growth_factor = to_double(key, value);
    } else if (key == "k4_slack") {
      cfg.tolerances.k4_slack = to_double(key, value);
    } else {
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (cfg.max_k < 1) throw ConfigError("config: max_k must be positive");
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string fixture_dir() {
  if (const char* env = std::getenv("GAUSSQ_FIXTURES"); env && *env) return env;
  return GAUSSQ_FIXTURE_DIR;
}

}  // namespace gaussq::cli

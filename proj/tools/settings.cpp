#include "settings.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>

namespace abpair::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string Settings::normalize(std::string key) {
  key = trim(key);
  while (!key.empty() && key.front() == '-') key.erase(key.begin());
  std::replace(key.begin(), key.end(), '_', '-');
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return key;
}

void Settings::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
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
      throw UsageError(path + ":" + std::to_string(lineno) +
                       ": expected key=value");
    }
    set(line.substr(0, eq), trim(line.substr(eq + 1)));
  }
}

void Settings::set(const std::string& key, const std::string& value) {
  const std::string k = normalize(key);
  if (!known_.count(k)) throw UsageError("unknown setting '" + k + "'");
  values_[k] = value;
}

bool Settings::has(const std::string& key) const {
  return values_.count(key) > 0;
}

std::string Settings::str(const std::string& key,
                          const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double Settings::num(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& s = it->second;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0' || errno == ERANGE) {
    throw UsageError("setting '" + key + "': '" + s + "' is not a number");
  }
  return v;
}

long Settings::integer(const std::string& key, long fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& s = it->second;
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(s.c_str(), &end, 0);  // accepts 0x... too
  if (s.empty() || *end != '\0' || errno == ERANGE) {
    throw UsageError("setting '" + key + "': '" + s + "' is not an integer");
  }
  return v;
}

bool Settings::flag(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return false;
  const std::string v = normalize(it->second);
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw UsageError("setting '" + key + "': expected a boolean");
}

}  // namespace abpair::cli

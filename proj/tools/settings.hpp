#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace abpair::cli {

// Bad flag value or config file. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat key=value settings. Keys use the long flag spelling without dashes
// ("k-perp"); underscores are accepted and normalized.
class Settings {
 public:
  explicit Settings(std::set<std::string> known) : known_(std::move(known)) {}

  static std::string normalize(std::string key);

  // '#' starts a comment; blank lines are ignored.
  void load_file(const std::string& path);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;
  std::string str(const std::string& key, const std::string& fallback) const;
  double num(const std::string& key, double fallback) const;
  long integer(const std::string& key, long fallback) const;
  bool flag(const std::string& key) const;

 private:
  std::set<std::string> known_;
  std::map<std::string, std::string> values_;
};

}  // namespace abpair::cli

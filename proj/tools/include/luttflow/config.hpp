#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace luttflow::cli {

// Flat `dotted.key = value` file. Lists are comma separated; a
// `start:stop:count` value expands to an evenly spaced grid.
class Config {
 public:
  static Config parse(const std::string& text, const std::string& origin = "<string>");
  static Config load(const std::filesystem::path& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  void set(const std::string& key, const std::string& value) { values_[key] = value; }

  double number(const std::string& key, double fallback) const;
  long long integer(const std::string& key, long long fallback) const;
  std::string text(const std::string& key, const std::string& fallback) const;
  std::vector<double> grid(const std::string& key, std::vector<double> fallback) const;

  // ConfigError naming the first key outside `known`
  void reject_unknown(const std::vector<std::string>& known) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

double parse_number(const std::string& key, const std::string& raw);
std::vector<double> parse_grid(const std::string& key, const std::string& raw);

}  // namespace luttflow::cli

#include "luttflow/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "luttflow/error.hpp"

namespace luttflow::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_key(const std::string& k) {
  if (k.empty() || k.front() == '.' || k.back() == '.') return false;
  return std::all_of(k.begin(), k.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  });
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back({});
  return out;
}

}  // namespace

double parse_number(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
    fail(ErrorKind::ConfigError, "key '" + key + "': '" + s + "' is not a finite number");
  return v;
}

std::vector<double> parse_grid(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) fail(ErrorKind::ConfigError, "key '" + key + "': range needs start:stop:count");
    const double a = parse_number(key, parts[0]);
    const double b = parse_number(key, parts[1]);
    const double n = parse_number(key, parts[2]);
    if (n < 1 || n != std::floor(n) || n > 1e7)
      fail(ErrorKind::ConfigError, "key '" + key + "': count must be a positive integer");
    const auto count = static_cast<std::size_t>(n);
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
      out[i] = count == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    return out;
  }
  std::vector<double> out;
  for (const auto& p : split(s, ',')) out.push_back(parse_number(key, p));
  if (out.empty()) fail(ErrorKind::ConfigError, "key '" + key + "': empty list");
  return out;
}

Config Config::parse(const std::string& text, const std::string& origin) {
  Config c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) fail(ErrorKind::ConfigError, where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!valid_key(key)) fail(ErrorKind::ConfigError, where + ": malformed key '" + key + "'");
    if (value.empty()) fail(ErrorKind::ConfigError, where + ": key '" + key + "' has no value");
    if (c.has(key)) fail(ErrorKind::ConfigError, where + ": duplicate key '" + key + "'");
    c.values_[key] = value;
  }
  return c;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::ConfigError, "cannot read config file " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path.string());
}

double Config::number(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : parse_number(key, it->second);
}

long long Config::integer(const std::string& key, long long fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const double v = parse_number(key, it->second);
  if (v != std::floor(v) || std::abs(v) > 9.0e15)
    fail(ErrorKind::ConfigError, "key '" + key + "': expected an integer");
  return static_cast<long long>(v);
}

std::string Config::text(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

std::vector<double> Config::grid(const std::string& key, std::vector<double> fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : parse_grid(key, it->second);
}

void Config::reject_unknown(const std::vector<std::string>& known) const {
  for (const auto& [k, v] : values_)
    if (std::find(known.begin(), known.end(), k) == known.end())
      fail(ErrorKind::ConfigError, "unknown key '" + k + "'");
}

}  // namespace luttflow::cli

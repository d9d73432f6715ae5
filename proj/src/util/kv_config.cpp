#include "gnssro/util/kv_config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gnssro/core/error.hpp"

namespace gnssro::util {

namespace {
std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace

KvConfig KvConfig::parse(std::istream& in) {
  KvConfig cfg;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line.erase(hash_pos);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line is not 'key = value'", line_no);
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) throw ParseError("config line with empty key", line_no);
    if (cfg.entries_.count(key)) throw ParseError("duplicate config key '" + key + "'", line_no);
    cfg.entries_[key] = value;
  }
  return cfg;
}

KvConfig KvConfig::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("config: cannot open '" + path + "'");
  return parse(f);
}

bool KvConfig::has(const std::string& key) const { return entries_.count(key) != 0; }

std::string KvConfig::get_string(const std::string& key, const std::string& fallback) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double KvConfig::get_double(const std::string& key, double fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw Error("config: key '" + key + "' is not numeric: '" + it->second + "'");
  }
}

long KvConfig::get_long(const std::string& key, long fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  try {
    return std::stol(it->second);
  } catch (const std::exception&) {
    throw Error("config: key '" + key + "' is not an integer: '" + it->second + "'");
  }
}

bool KvConfig::get_bool(const std::string& key, bool fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const std::string& v = it->second;
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error("config: key '" + key + "' is not a boolean: '" + v + "'");
}

void KvConfig::set(const std::string& key, const std::string& value) { entries_[key] = value; }

std::set<std::string> KvConfig::unknown_keys(const std::set<std::string>& known) const {
  std::set<std::string> unknown;
  for (const auto& [k, v] : entries_) {
    if (!known.count(k)) unknown.insert(k);
  }
  return unknown;
}

std::uint64_t KvConfig::hash() const {
  // FNV-1a over "key=value\n" in sorted key order (std::map iterates sorted).
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& [k, v] : entries_) {
    mix(k);
    mix("=");
    mix(v);
    mix("\n");
  }
  return h;
}

std::string KvConfig::hash_hex() const {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

}  // namespace gnssro::util

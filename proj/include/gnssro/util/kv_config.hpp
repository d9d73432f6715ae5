#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>

namespace gnssro::util {

/// Flat key-value configuration with section prefixes
/// (`raytracer.quad_tol = 1e-9`), '#' comments. Unknown keys are rejected
/// against the schema the caller supplies; the canonical hash is stable
/// across platforms for identical content.
class KvConfig {
 public:
  static KvConfig parse(std::istream& in);
  static KvConfig parse_file(const std::string& path);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long get_long(const std::string& key, long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  void set(const std::string& key, const std::string& value);

  /// Keys not in `known` (exact match). Used to reject typos up front.
  std::set<std::string> unknown_keys(const std::set<std::string>& known) const;

  /// FNV-1a 64-bit over the canonicalized (sorted key=value) content.
  std::uint64_t hash() const;
  std::string hash_hex() const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace gnssro::util

#include "gnssro/util/numeric.hpp"

#include <cctype>
#include <cstdlib>

namespace gnssro::util {

std::optional<double> parse_double_strict(const std::string& s) {
  size_t begin = 0;
  while (begin < s.size() && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  if (begin == s.size()) return std::nullopt;
  const char* start = s.c_str() + begin;
  char* end = nullptr;
  const double v = std::strtod(start, &end);
  if (end == start) return std::nullopt;
  for (const char* p = end; *p; ++p) {
    if (!std::isspace(static_cast<unsigned char>(*p))) return std::nullopt;
  }
  return v;
}

}  // namespace gnssro::util

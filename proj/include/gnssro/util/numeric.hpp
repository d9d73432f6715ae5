#pragma once

#include <optional>
#include <string>

namespace gnssro::util {

/// Strict double parse: the whole field (modulo surrounding whitespace) must
/// be consumed, so "2656x.0" is rejected rather than truncated.
std::optional<double> parse_double_strict(const std::string& s);

}  // namespace gnssro::util

#pragma once

#include <iosfwd>
#include <vector>

#include "gnssro/ingest/types.hpp"

namespace gnssro::ingest {

struct PlatformCsvStats {
  long rejected_rows = 0;  // non-finite fields
};

struct PlatformCsvResult {
  std::vector<PlatformState> states;
  PlatformCsvStats stats;
};

/// Parse the platform trajectory log:
///   week,tow,x_m,y_m,z_m,vx_mps,vy_mps,vz_mps[,sigma_m]
/// '#' lines are comments. Rows with non-finite fields are dropped and
/// counted; out-of-order rows raise ParseError; a header missing a required
/// column raises ParseError naming it.
PlatformCsvResult parse_platform_csv(std::istream& in);

/// Round-trip-exact writer (%.17g fields).
void write_platform_csv(std::ostream& out, const std::vector<PlatformState>& states);

}  // namespace gnssro::ingest

#pragma once

#include <iosfwd>

#include "gnssro/ingest/types.hpp"

namespace gnssro::ingest {

struct Sp3ParseStats {
  long dropped_positions = 0;  // bad-value sentinel positions
};

struct Sp3Result {
  EphemerisTable table;
  Sp3ParseStats stats;
};

/// Parse SP3-c/-d "P" position records. Positions are converted km -> m;
/// clock entries carrying the 999999.999999 sentinel are marked absent.
/// Non-monotone epochs or an unknown version letter raise ParseError.
Sp3Result parse_sp3(std::istream& in);

/// Fixture writer: SP3-c with position records only, F14.6 km fields.
void write_sp3(std::ostream& out, const EphemerisTable& table);

}  // namespace gnssro::ingest

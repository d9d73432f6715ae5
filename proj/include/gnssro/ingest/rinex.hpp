#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gnssro/ingest/types.hpp"

namespace gnssro::ingest {

/// Obs-code priority list for the carrier phase. The first code present in
/// the file's SYS / # / OBS TYPES table (and non-blank in the record) wins.
struct RinexSelection {
  std::vector<std::string> phase_codes{"L1C", "L1X"};
};

struct RinexParseStats {
  long skipped_epochs = 0;      // epoch flag > 1
  long unknown_sat_records = 0; // unknown constellation letter
  long blank_field_drops = 0;   // record missing phase/Doppler/SNR
  std::vector<std::string> warnings;
};

struct RinexObsResult {
  std::vector<ObsEpoch> obs;
  RinexParseStats stats;
};

/// Parse a RINEX 3.x observation stream (the record subset the chain needs:
/// L1 phase, D1 Doppler, S1 SNR, C1 pseudorange). Throws ParseError with a
/// line number on malformed input; recoverable oddities are counted instead.
RinexObsResult parse_rinex_obs(std::istream& in, const RinexSelection& sel = {});

/// Fixture writer: emits a minimal RINEX 3.04 observation file carrying
/// C1C/L1C/D1C/S1C for every constellation present. Values are quantized to
/// the standard F14.3 field width.
void write_rinex_obs(std::ostream& out, const std::vector<ObsEpoch>& obs,
                     const std::string& marker_name = "SIM");

}  // namespace gnssro::ingest

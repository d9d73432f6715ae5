#pragma once

#include <string>
#include <vector>

#include "gnssro/ingest/types.hpp"

namespace gnssro::ingest {

struct AlignConfig {
  double tolerance_s = 0.05;   // max |obs - platform| pairing offset
  double gap_split_s = 30.0;   // obs gaps above this split the arc
};

struct AlignStats {
  long unpaired_obs = 0;  // no platform state within tolerance
  std::vector<std::string> warnings;
};

struct AlignResult {
  std::vector<OccultationDataset> datasets;
  AlignStats stats;
};

/// Group observations per satellite, pair each epoch with the platform state
/// nearest in time (within tolerance, no extrapolation), and split arcs at
/// gaps longer than gap_split_s. Gap splits are quality events surfaced to
/// the stats ledger downstream. Never fabricates epochs: every output obs
/// exists in the input.
AlignResult align_epochs(const std::vector<ObsEpoch>& obs,
                         const std::vector<PlatformState>& platform,
                         const EphemerisTable& ephem, const AlignConfig& cfg = {});

}  // namespace gnssro::ingest

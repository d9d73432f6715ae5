#pragma once

#include <vector>

#include "gnssro/core/constants.hpp"
#include "gnssro/preprocess/series.hpp"

namespace gnssro::preprocess {

struct ClockCalConfig {
  double min_ref_elevation = 30.0 * constants::deg;  // reference eligibility floor
  double match_tolerance_s = 0.05;                   // epoch pairing tolerance
};

/// Pick the reference arc: highest mean elevation among candidates at or
/// above the elevation floor, excluding the occulting arc itself. Returns
/// nullptr when none qualifies.
const ExcessPhaseSeries* choose_reference(const std::vector<const ExcessPhaseSeries*>& arcs,
                                          const ExcessPhaseSeries& occ,
                                          const ClockCalConfig& cfg = {});

/// Step two: receiver clock calibration by single difference against a
/// high-elevation arc, output(t) = occ(t) - ref(t) sample-wise. Epochs
/// without a matching reference sample are flagged as gaps. Throws Error
/// when the reference does not qualify (elevation floor), with a hint to
/// relax the threshold.
ExcessPhaseSeries calibrate_clock(const ExcessPhaseSeries& occ, const ExcessPhaseSeries& ref,
                                  const ClockCalConfig& cfg = {});

}  // namespace gnssro::preprocess

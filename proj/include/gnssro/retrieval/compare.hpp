#pragma once

#include "gnssro/retrieval/profiles.hpp"

namespace gnssro::retrieval {

struct CompareBand {
  double h_lo = 0.0;         // m above the reference surface
  double h_hi = 0.0;
  double mean_percent = 0.0; // mean of (retrieved - reference)/reference, %
  double rms_percent = 0.0;
  long count = 0;
};

/// Per-band fractional refractivity statistics of retrieved against
/// reference, with the reference linearly interpolated onto the retrieved
/// grid. band_edges are heights above surface_radius, ascending. Throws
/// Error when the profiles do not overlap.
std::vector<CompareBand> compare_refractivity(const RefractivityProfile& retrieved,
                                              const RefractivityProfile& reference,
                                              const std::vector<double>& band_edges,
                                              double surface_radius);

}  // namespace gnssro::retrieval

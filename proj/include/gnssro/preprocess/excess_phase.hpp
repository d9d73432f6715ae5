#pragma once

#include "gnssro/geometry/light_time.hpp"
#include "gnssro/preprocess/series.hpp"
#include "gnssro/raytracer/simulate.hpp"

namespace gnssro::preprocess {

struct ExcessPhaseConfig {
  geometry::LightTimeConfig light_time;
  int interp_order = 10;  // ephemeris Lagrange order
};

/// Step one of the chain: excess(t) = lambda_L1 * phase(t) - line-of-sight
/// range, with the per-arc carrier ambiguity removed by zeroing the series
/// at its highest-elevation epoch (where the true excess is smallest).
/// Epochs without usable geometry are flagged as gaps.
ExcessPhaseSeries compute_excess_phase(const OccultationDataset& ds,
                                       const ExcessPhaseConfig& cfg = {});

/// A simulated series re-expressed as a smoothed-stage ExcessPhaseSeries
/// (truth path: no receiver noise, Doppler already differentiated). Lets the
/// retrieval consume either source identically.
ExcessPhaseSeries series_from_simulation(const raytracer::SimSeries& sim);

}  // namespace gnssro::preprocess

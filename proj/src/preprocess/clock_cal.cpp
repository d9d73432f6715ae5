#include "gnssro/preprocess/clock_cal.hpp"

#include <algorithm>
#include <cmath>

#include "gnssro/core/error.hpp"

namespace gnssro::preprocess {

const ExcessPhaseSeries* choose_reference(const std::vector<const ExcessPhaseSeries*>& arcs,
                                          const ExcessPhaseSeries& occ,
                                          const ClockCalConfig& cfg) {
  const ExcessPhaseSeries* best = nullptr;
  double best_elev = cfg.min_ref_elevation;
  for (const auto* arc : arcs) {
    if (!arc || arc == &occ || arc->sat == occ.sat) continue;
    if (arc->count_valid() == 0) continue;
    const double elev = arc->mean_elevation();
    if (elev >= best_elev) {
      best = arc;
      best_elev = elev;
    }
  }
  return best;
}

ExcessPhaseSeries calibrate_clock(const ExcessPhaseSeries& occ, const ExcessPhaseSeries& ref,
                                  const ClockCalConfig& cfg) {
  require_stage(occ, Stage::Raw, "calibrate_clock");
  if (ref.mean_elevation() < cfg.min_ref_elevation) {
    throw Error(
        "calibrate_clock: no eligible reference arc (mean elevation below floor); "
        "relax clock.min_ref_elevation to accept a lower reference");
  }

  std::vector<double> ref_times;
  ref_times.reserve(ref.epochs.size());
  std::vector<const ExcessPhaseEpoch*> ref_eps;
  for (const auto& e : ref.epochs) {
    if (!e.valid) continue;
    ref_times.push_back(total_seconds(e.t));
    ref_eps.push_back(&e);
  }

  ExcessPhaseSeries out = occ;
  out.stage = Stage::Calibrated;
  out.reference_sat = ref.sat.str();
  for (auto& e : out.epochs) {
    if (!e.valid) continue;
    const double t = total_seconds(e.t);
    auto it = std::lower_bound(ref_times.begin(), ref_times.end(), t);
    double best_dt = std::numeric_limits<double>::infinity();
    const ExcessPhaseEpoch* match = nullptr;
    if (it != ref_times.end()) {
      best_dt = *it - t;
      match = ref_eps[it - ref_times.begin()];
    }
    if (it != ref_times.begin()) {
      const double dt = t - *(it - 1);
      if (dt < std::abs(best_dt)) {
        best_dt = dt;
        match = ref_eps[it - 1 - ref_times.begin()];
      }
    }
    if (!match || std::abs(best_dt) > cfg.match_tolerance_s) {
      e.valid = false;
      e.flag = EpochFlag::Gap;
      continue;
    }
    e.excess_phase -= match->excess_phase;
  }
  return out;
}

}  // namespace gnssro::preprocess

#include "gnssro/preprocess/excess_phase.hpp"

#include <cmath>

#include "gnssro/core/constants.hpp"
#include "gnssro/core/error.hpp"
#include "gnssro/geometry/trajectory.hpp"

namespace gnssro::preprocess {

using constants::lambda_l1;

ExcessPhaseSeries compute_excess_phase(const OccultationDataset& ds,
                                       const ExcessPhaseConfig& cfg) {
  if (ds.obs.empty()) throw Error("compute_excess_phase: empty dataset");
  if (ds.ephem.empty()) throw Error("compute_excess_phase: dataset carries no ephemeris");

  ExcessPhaseSeries out;
  out.sat = ds.sat;
  out.event_id = ds.event_id;
  out.stage = Stage::Raw;
  out.epochs.reserve(ds.obs.size());

  const auto rx_provider = geometry::provider_from_platform(ds.platform);
  const auto tx_provider = geometry::provider_from_table(ds.ephem, cfg.interp_order);

  for (const auto& o : ds.obs) {
    ExcessPhaseEpoch ep;
    ep.t = o.t;
    ep.snr = o.snr;
    try {
      ep.rx_state = rx_provider(o.t);
      const auto lt = geometry::light_time_range(ep.rx_state.pos, tx_provider, o.t,
                                                 cfg.light_time);
      ep.tx_state = geometry::effective_tx_state(rx_provider, tx_provider, o.t, cfg.light_time);
      ep.range = lt.range;
      ep.excess_phase = lambda_l1 * o.carrier_phase - lt.range;
      ep.elevation = elevation_azimuth(ep.rx_state.pos, ep.tx_state.pos).elevation;
      ep.valid = true;
    } catch (const Error&) {
      ep.valid = false;
      ep.flag = EpochFlag::Gap;
    }
    out.epochs.push_back(std::move(ep));
  }

  // Remove the carrier ambiguity constant at the highest-elevation epoch.
  const ExcessPhaseEpoch* anchor = nullptr;
  for (const auto& ep : out.epochs) {
    if (ep.valid && (!anchor || ep.elevation > anchor->elevation)) anchor = &ep;
  }
  if (!anchor) throw Error("compute_excess_phase: no epoch with usable geometry");
  const double bias = anchor->excess_phase;
  for (auto& ep : out.epochs) {
    if (ep.valid) ep.excess_phase -= bias;
  }
  return out;
}

ExcessPhaseSeries series_from_simulation(const raytracer::SimSeries& sim) {
  ExcessPhaseSeries out;
  out.sat = sim.sat;
  out.event_id = sim.sat.str() + "_sim";
  out.stage = Stage::Smoothed;
  out.reference_sat = "truth";
  out.epochs.reserve(sim.epochs.size());
  for (const auto& se : sim.epochs) {
    ExcessPhaseEpoch ep;
    ep.t = se.t;
    ep.valid = se.ok;
    ep.flag = se.ok ? EpochFlag::Ok : EpochFlag::Gap;
    ep.excess_phase = se.excess_phase;
    ep.excess_doppler = se.excess_doppler;
    ep.snr = 45.0;
    ep.elevation = se.elevation;
    ep.range = se.range;
    ep.rx_state = se.rx_state;
    ep.tx_state = se.tx_state;
    out.epochs.push_back(std::move(ep));
  }
  return out;
}

}  // namespace gnssro::preprocess

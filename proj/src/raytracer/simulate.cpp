#include "gnssro/raytracer/simulate.hpp"

#include <cmath>

#include "gnssro/core/error.hpp"

namespace gnssro::raytracer {

SimSeries simulate_occultation(const atmosphere::AtmosphereModel& model,
                               const geometry::StateProvider& tx,
                               const geometry::StateProvider& rx, const SatId& sat,
                               const Epoch& t_begin, double duration_s, double dt,
                               const SimulateConfig& cfg) {
  if (duration_s < 2.0 * dt) throw Error("simulate_occultation: span shorter than 2*dt");
  SimSeries series;
  series.sat = sat;
  const long n = static_cast<long>(std::floor(duration_s / dt)) + 1;
  series.epochs.reserve(n);

  for (long k = 0; k < n; ++k) {
    SimEpoch ep;
    ep.t = advance(t_begin, static_cast<double>(k) * dt);
    try {
      ep.rx_state = rx(ep.t);
      const auto lt = geometry::light_time_range(ep.rx_state.pos, tx, ep.t, cfg.light_time);
      ep.tx_state = geometry::effective_tx_state(rx, tx, ep.t, cfg.light_time);
      ep.range = lt.range;
      const RayResult ray = solve_connection(model, ep.tx_state.pos, ep.rx_state.pos,
                                             cfg.connection);
      ep.excess_phase = ray.excess_path;
      ep.true_alpha = ray.alpha;
      ep.true_a = ray.a;
      ep.elevation = elevation_azimuth(ep.rx_state.pos, ep.tx_state.pos).elevation;
      ep.ok = true;
    } catch (const Error&) {
      ep.ok = false;
      ++series.failed_epochs;
    }
    series.epochs.push_back(ep);
  }

  // Excess Doppler by centered differences (one-sided at the ends), exactly
  // mirroring what the preprocessing chain does to real data.
  auto& eps = series.epochs;
  for (size_t k = 0; k < eps.size(); ++k) {
    if (!eps[k].ok) continue;
    const bool prev_ok = k > 0 && eps[k - 1].ok;
    const bool next_ok = k + 1 < eps.size() && eps[k + 1].ok;
    if (prev_ok && next_ok) {
      eps[k].excess_doppler =
          (eps[k + 1].excess_phase - eps[k - 1].excess_phase) /
          (diff_seconds(eps[k + 1].t, eps[k - 1].t));
    } else if (next_ok) {
      eps[k].excess_doppler = (eps[k + 1].excess_phase - eps[k].excess_phase) /
                              diff_seconds(eps[k + 1].t, eps[k].t);
    } else if (prev_ok) {
      eps[k].excess_doppler = (eps[k].excess_phase - eps[k - 1].excess_phase) /
                              diff_seconds(eps[k].t, eps[k - 1].t);
    }
  }
  return series;
}

}  // namespace gnssro::raytracer

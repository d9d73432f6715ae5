#pragma once

#include <cstdint>
#include <vector>

#include "gnssro/ingest/types.hpp"
#include "gnssro/raytracer/simulate.hpp"

namespace gnssro::raytracer {

/// Noise/error injection for synthesized observables. All randomness is
/// seeded; default runs are noise-free.
struct SynthesisOptions {
  double snr_db_hz = 45.0;
  double phase_noise_sigma_m = 0.0;
  std::uint64_t seed = 1;
};

/// Receiver clock error time series (random walk, sigma in m/sqrt(s)),
/// aligned with a simulated series' epochs. Shared between the occulting
/// and reference arcs so the clock calibration sees a common mode.
std::vector<double> clock_random_walk(size_t n, double dt, double sigma_m_per_sqrt_s,
                                      std::uint64_t seed);

/// Encode a simulated series as receiver observables:
///   carrier_phase = (range + excess + clock + noise) / lambda_L1  [cycles]
///   doppler       = -(d(range+excess)/dt) / lambda_L1             [Hz]
/// clock_m may be empty (no clock error) or one entry per epoch.
std::vector<ObsEpoch> synthesize_obs(const SimSeries& series,
                                     const SynthesisOptions& opt = {},
                                     const std::vector<double>& clock_m = {});

/// Platform log matching the simulated epochs.
std::vector<PlatformState> platform_states_from(const SimSeries& series);

/// Sample a transmitter trajectory into an ephemeris table (raw orbit
/// positions, no light-time correction).
EphemerisTable sample_ephemeris(const geometry::StateProvider& tx, const SatId& sat,
                                const Epoch& t_begin, double duration_s, double spacing_s);

/// Add an integer-cycle jump to all samples at or after epoch index `at`.
void inject_cycle_slip(std::vector<ObsEpoch>& obs, size_t at, int cycles);

}  // namespace gnssro::raytracer

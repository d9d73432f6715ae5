#include "gnssro/raytracer/synthesize.hpp"

#include <cmath>
#include <random>

#include "gnssro/core/constants.hpp"
#include "gnssro/core/error.hpp"

namespace gnssro::raytracer {

using constants::lambda_l1;

std::vector<double> clock_random_walk(size_t n, double dt, double sigma_m_per_sqrt_s,
                                      std::uint64_t seed) {
  std::vector<double> clock(n, 0.0);
  if (sigma_m_per_sqrt_s <= 0.0) return clock;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> step(0.0, sigma_m_per_sqrt_s * std::sqrt(dt));
  double acc = 0.0;
  for (size_t k = 0; k < n; ++k) {
    acc += step(rng);
    clock[k] = acc;
  }
  return clock;
}

std::vector<ObsEpoch> synthesize_obs(const SimSeries& series, const SynthesisOptions& opt,
                                     const std::vector<double>& clock_m) {
  if (!clock_m.empty() && clock_m.size() != series.epochs.size()) {
    throw Error("synthesize_obs: clock series length mismatch");
  }
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> noise(0.0, opt.phase_noise_sigma_m);

  std::vector<ObsEpoch> obs;
  obs.reserve(series.epochs.size());
  const auto& eps = series.epochs;
  for (size_t k = 0; k < eps.size(); ++k) {
    if (!eps[k].ok) continue;
    ObsEpoch o;
    o.t = eps[k].t;
    o.sat = series.sat;
    double path = eps[k].range + eps[k].excess_phase;
    if (!clock_m.empty()) path += clock_m[k];
    if (opt.phase_noise_sigma_m > 0.0) path += noise(rng);
    o.carrier_phase = path / lambda_l1;

    // Doppler sign convention: positive while the range is closing.
    double rate;
    const auto total = [&](size_t i) { return eps[i].range + eps[i].excess_phase; };
    if (k > 0 && k + 1 < eps.size() && eps[k - 1].ok && eps[k + 1].ok) {
      rate = (total(k + 1) - total(k - 1)) / diff_seconds(eps[k + 1].t, eps[k - 1].t);
    } else if (k + 1 < eps.size() && eps[k + 1].ok) {
      rate = (total(k + 1) - total(k)) / diff_seconds(eps[k + 1].t, eps[k].t);
    } else if (k > 0 && eps[k - 1].ok) {
      rate = (total(k) - total(k - 1)) / diff_seconds(eps[k].t, eps[k - 1].t);
    } else {
      rate = 0.0;
    }
    o.doppler = -rate / lambda_l1;
    o.snr = opt.snr_db_hz;
    o.pseudorange = eps[k].range;
    obs.push_back(std::move(o));
  }
  return obs;
}

std::vector<PlatformState> platform_states_from(const SimSeries& series) {
  std::vector<PlatformState> out;
  out.reserve(series.epochs.size());
  for (const auto& ep : series.epochs) {
    if (!ep.ok) continue;
    PlatformState s;
    s.t = ep.t;
    s.pos = ep.rx_state.pos;
    s.vel = ep.rx_state.vel;
    out.push_back(std::move(s));
  }
  return out;
}

EphemerisTable sample_ephemeris(const geometry::StateProvider& tx, const SatId& sat,
                                const Epoch& t_begin, double duration_s, double spacing_s) {
  EphemerisTable table;
  auto& samples = table.satellites[sat];
  const long n = static_cast<long>(std::floor(duration_s / spacing_s)) + 1;
  samples.reserve(n);
  for (long k = 0; k < n; ++k) {
    const Epoch t = advance(t_begin, static_cast<double>(k) * spacing_s);
    EphemerisSample s;
    s.t = t;
    s.pos = tx(t).pos;
    s.clock_bias = 0.0;
    samples.push_back(std::move(s));
  }
  return table;
}

void inject_cycle_slip(std::vector<ObsEpoch>& obs, size_t at, int cycles) {
  for (size_t k = at; k < obs.size(); ++k) {
    obs[k].carrier_phase += static_cast<double>(cycles);
  }
}

}  // namespace gnssro::raytracer

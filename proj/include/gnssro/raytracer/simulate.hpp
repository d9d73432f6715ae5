#pragma once

#include <vector>

#include "gnssro/geometry/light_time.hpp"
#include "gnssro/raytracer/connection.hpp"

namespace gnssro::raytracer {

/// One simulated occultation epoch. excess_phase is the optical-path excess
/// of the connecting ray; true_alpha/true_a are recorded as retrieval truth.
struct SimEpoch {
  Epoch t;
  bool ok = false;
  double excess_phase = 0.0;    // m
  double excess_doppler = 0.0;  // m/s, centered difference of excess_phase
  double true_alpha = 0.0;      // rad
  double true_a = 0.0;          // m
  double elevation = 0.0;       // rad, straight-line vs local ellipsoidal horizon
  double range = 0.0;           // m, light-time geometric range
  SatState rx_state;
  SatState tx_state;            // effective emission state (reception-frame ECEF)
};

struct SimSeries {
  SatId sat;
  std::vector<SimEpoch> epochs;
  int failed_epochs = 0;
};

struct SimulateConfig {
  ConnectionConfig connection;
  geometry::LightTimeConfig light_time;
};

/// Per-epoch geometric-optics simulation of an occultation: light-time
/// geometry, ray connection through the model, and excess Doppler by the
/// same numerical differentiation the preprocessing chain applies to real
/// data. Per-epoch solver failures set the epoch flag and the series
/// continues.
SimSeries simulate_occultation(const atmosphere::AtmosphereModel& model,
                               const geometry::StateProvider& tx,
                               const geometry::StateProvider& rx, const SatId& sat,
                               const Epoch& t_begin, double duration_s, double dt,
                               const SimulateConfig& cfg = {});

}  // namespace gnssro::raytracer

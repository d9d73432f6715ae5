#pragma once

#include "gnssro/core/constants.hpp"
#include "gnssro/geometry/trajectory.hpp"

namespace gnssro::geometry {

/// Light-time solution for a signal received at rx_pos at t_rx.
struct LightTimeResult {
  double range = 0.0;        // m, |rx - tx_effective|
  SatState tx_state;         // emission state in the reception-time ECEF frame
  double light_time = 0.0;   // s
  int iterations = 0;
};

struct LightTimeConfig {
  double omega_earth = constants::wgs84_omega;  // rad/s; 0 disables Sagnac
  double tol_m = 1e-4;
  int max_iter = 10;
};

/// Fixed-point iteration t_tx = t_rx - range/c with the Earth-rotation
/// (Sagnac) correction applied in ECEF: the emission position is rotated by
/// omega*tau about +z into the reception-time frame. Throws Error on
/// non-convergence or a degenerate (zero-distance) geometry.
LightTimeResult light_time_range(const EcefVec& rx_pos, const StateProvider& tx, const Epoch& t_rx,
                                 const LightTimeConfig& cfg = {});

/// Effective transmitter state for reception at rx(t): emission position in
/// the reception-time frame plus its time derivative (centered difference of
/// the whole light-time solution, step fd_step_s). This is the tx state the
/// preprocessing chain stores per epoch and the retrieval consumes, so both
/// sides differentiate exactly the same geometry.
SatState effective_tx_state(const StateProvider& rx, const StateProvider& tx, const Epoch& t,
                            const LightTimeConfig& cfg = {}, double fd_step_s = 0.5);

}  // namespace gnssro::geometry

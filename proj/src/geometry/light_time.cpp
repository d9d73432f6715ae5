#include "gnssro/geometry/light_time.hpp"

#include <cmath>
#include <optional>

#include "gnssro/core/error.hpp"

namespace gnssro::geometry {

using constants::c_light;

namespace {

EcefVec rotate_z(const EcefVec& v, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x() + s * v.y(), -s * v.x() + c * v.y(), v.z()};
}

}  // namespace

LightTimeResult light_time_range(const EcefVec& rx_pos, const StateProvider& tx, const Epoch& t_rx,
                                 const LightTimeConfig& cfg) {
  LightTimeResult res;
  double tau = 0.0;
  double range_prev = -1.0;
  for (int it = 0; it < cfg.max_iter; ++it) {
    const SatState raw = tx(advance(t_rx, -tau));
    const double theta = cfg.omega_earth * tau;
    const EcefVec pos_eff = rotate_z(raw.pos, theta);
    const double range = (rx_pos - pos_eff).norm();
    if (range == 0.0) throw Error("light_time_range: coincident transmitter and receiver");
    res.range = range;
    res.tx_state.t = raw.t;
    res.tx_state.pos = pos_eff;
    res.tx_state.vel = rotate_z(raw.vel, theta);
    res.light_time = tau;
    res.iterations = it + 1;
    if (range_prev >= 0.0 && std::abs(range - range_prev) < cfg.tol_m) return res;
    range_prev = range;
    tau = range / c_light;
  }
  throw Error("light_time_range: fixed-point iteration did not converge");
}

SatState effective_tx_state(const StateProvider& rx, const StateProvider& tx, const Epoch& t,
                            const LightTimeConfig& cfg, double fd_step_s) {
  const LightTimeResult now = light_time_range(rx(t).pos, tx, t, cfg);

  auto solve_at = [&](double dt) -> std::optional<EcefVec> {
    try {
      const Epoch te = advance(t, dt);
      return light_time_range(rx(te).pos, tx, te, cfg).tx_state.pos;
    } catch (const Error&) {
      return std::nullopt;  // trajectory edge; fall back to one-sided below
    }
  };
  const auto lo = solve_at(-fd_step_s);
  const auto hi = solve_at(fd_step_s);

  SatState s = now.tx_state;
  s.t = t;
  if (lo && hi) {
    s.vel = (*hi - *lo) / (2.0 * fd_step_s);
  } else if (hi) {
    s.vel = (*hi - now.tx_state.pos) / fd_step_s;
  } else if (lo) {
    s.vel = (now.tx_state.pos - *lo) / fd_step_s;
  }
  return s;
}

}  // namespace gnssro::geometry

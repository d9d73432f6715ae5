#include "gnssro/geometry/events.hpp"

#include <cmath>

#include "gnssro/core/geodesy.hpp"

namespace gnssro::geometry {

GeodeticPos straight_ray_tangent_point(const EcefVec& rx, const EcefVec& tx) {
  // Golden-section minimum of geodetic height along the segment rx -> tx.
  auto height = [&](double s) {
    return geodetic_from_ecef(rx + s * (tx - rx)).h;
  };
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 0.0, b = 1.0;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = height(x1), f2 = height(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = height(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = height(x2);
    }
  }
  return geodetic_from_ecef(rx + 0.5 * (a + b) * (tx - rx));
}

std::vector<OccultationEvent> detect_events(
    const StateProvider& platform, const Epoch& t_begin, const Epoch& t_end,
    const std::vector<std::pair<SatId, StateProvider>>& satellites, const EventScanConfig& cfg) {
  std::vector<OccultationEvent> events;
  const double span = diff_seconds(t_end, t_begin);
  if (span <= 0.0) return events;
  const long n = static_cast<long>(std::floor(span / cfg.scan_dt)) + 1;

  for (const auto& [sat, sat_provider] : satellites) {
    std::vector<double> elev(n);
    std::vector<Epoch> when(n);
    std::vector<EcefVec> rx_pos(n), tx_pos(n);
    for (long k = 0; k < n; ++k) {
      when[k] = advance(t_begin, static_cast<double>(k) * cfg.scan_dt);
      rx_pos[k] = platform(when[k]).pos;
      tx_pos[k] = sat_provider(when[k]).pos;
      elev[k] = elevation_azimuth(rx_pos[k], tx_pos[k]).elevation;
    }

    enum class State { None, Setting, Rising };
    State state = State::None;
    long start = -1;

    auto close = [&](long end, EventKind kind) {
      if (end <= start) return;
      OccultationEvent ev;
      ev.sat = sat;
      ev.t_start = when[start];
      ev.t_end = when[end];
      ev.kind = kind;
      long kmin = start;
      for (long k = start; k <= end; ++k)
        if (elev[k] < elev[kmin]) kmin = k;
      ev.min_elevation = elev[kmin];
      const GeodeticPos tp = straight_ray_tangent_point(rx_pos[kmin], tx_pos[kmin]);
      ev.tangent_lat = tp.lat;
      ev.tangent_lon = tp.lon;
      events.push_back(ev);
    };

    for (long k = 1; k < n; ++k) {
      const double e_prev = elev[k - 1];
      const double e = elev[k];
      switch (state) {
        case State::None:
          if (e < cfg.elev_high && e < e_prev && e_prev > cfg.elev_low) {
            state = State::Setting;
            start = (e_prev < cfg.elev_high) ? k - 1 : k;
          } else if (e > e_prev && e_prev < cfg.elev_high && e > cfg.elev_low &&
                     e < cfg.elev_high) {
            state = State::Rising;
            start = k - 1;
          }
          break;
        case State::Setting:
          if (e <= cfg.elev_low) {
            close(k, EventKind::Setting);  // include the loss-crossing sample
            state = State::None;
          } else if (e > e_prev) {
            close(k - 1, EventKind::Setting);
            state = State::Rising;  // local minimum starts a rising arc
            start = k - 1;
          }
          break;
        case State::Rising:
          if (e >= cfg.elev_high) {
            close(k - 1, EventKind::Rising);
            state = State::None;
          } else if (e < e_prev) {
            close(k - 1, EventKind::Rising);
            state = State::Setting;
            start = k - 1;
          }
          break;
      }
    }
    if (state == State::Setting) close(n - 1, EventKind::Setting);
    if (state == State::Rising) close(n - 1, EventKind::Rising);
  }
  return events;
}

}  // namespace gnssro::geometry

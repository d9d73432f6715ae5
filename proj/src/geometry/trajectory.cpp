#include "gnssro/geometry/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "gnssro/core/error.hpp"

namespace gnssro::geometry {

SatState interpolate_platform(const std::vector<PlatformState>& states, const Epoch& t) {
  if (states.empty()) throw Error("interpolate_platform: empty trajectory");
  const double tt = total_seconds(t);
  const double t0 = total_seconds(states.front().t);
  const double t1 = total_seconds(states.back().t);
  if (tt < t0 - 1e-9 || tt > t1 + 1e-9) {
    throw Error("interpolate_platform: epoch outside trajectory span");
  }
  if (states.size() == 1 || tt <= t0) return SatState{t, states.front().pos, states.front().vel};
  if (tt >= t1) return SatState{t, states.back().pos, states.back().vel};

  auto it = std::lower_bound(states.begin(), states.end(), tt,
                             [](const PlatformState& s, double v) {
                               return total_seconds(s.t) < v;
                             });
  const size_t hi = it - states.begin();
  const PlatformState& a = states[hi - 1];
  const PlatformState& b = states[hi];
  // Week-aware differences; epoch magnitudes would otherwise cost ~1e-6 s
  // of precision, visible after multiplication by the velocity.
  const double h = diff_seconds(b.t, a.t);
  const double u = diff_seconds(t, a.t) / h;

  const double u2 = u * u, u3 = u2 * u;
  const double h00 = 2 * u3 - 3 * u2 + 1;
  const double h10 = u3 - 2 * u2 + u;
  const double h01 = -2 * u3 + 3 * u2;
  const double h11 = u3 - u2;

  const double d00 = (6 * u2 - 6 * u) / h;
  const double d10 = 3 * u2 - 4 * u + 1;
  const double d01 = (-6 * u2 + 6 * u) / h;
  const double d11 = 3 * u2 - 2 * u;

  SatState s;
  s.t = t;
  s.pos = h00 * a.pos + (h10 * h) * a.vel + h01 * b.pos + (h11 * h) * b.vel;
  s.vel = d00 * a.pos + d10 * a.vel + d01 * b.pos + d11 * b.vel;
  return s;
}

}  // namespace gnssro::geometry

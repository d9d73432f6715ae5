#pragma once

#include <functional>
#include <vector>

#include "gnssro/geometry/kepler.hpp"
#include "gnssro/geometry/orbit_interp.hpp"
#include "gnssro/ingest/types.hpp"

namespace gnssro::geometry {

/// Satellite/platform state as a function of time. Adapters below wrap the
/// concrete sources (ephemeris tables, Kepler elements, logged trajectories).
using StateProvider = std::function<SatState(const Epoch&)>;

inline StateProvider provider_from_table(std::vector<EphemerisSample> table, int order = 10) {
  return [table = std::move(table), order](const Epoch& t) {
    return interpolate_sat_state(table, t, order);
  };
}

inline StateProvider provider_from_elements(const KeplerElements& el) {
  return [el](const Epoch& t) { return kepler_state(el, t); };
}

/// Fixed point in ECEF (hovering balloon), zero velocity.
inline StateProvider provider_hover(const EcefVec& pos) {
  return [pos](const Epoch& t) { return SatState{t, pos, EcefVec::Zero()}; };
}

/// Cubic-Hermite interpolation of a logged trajectory (uses both position
/// and velocity of the bracketing samples). Throws outside the span.
SatState interpolate_platform(const std::vector<PlatformState>& states, const Epoch& t);

inline StateProvider provider_from_platform(std::vector<PlatformState> states) {
  return [states = std::move(states)](const Epoch& t) {
    return interpolate_platform(states, t);
  };
}

}  // namespace gnssro::geometry

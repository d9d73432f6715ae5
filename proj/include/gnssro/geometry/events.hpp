#pragma once

#include <vector>

#include "gnssro/core/constants.hpp"
#include "gnssro/geometry/trajectory.hpp"

namespace gnssro::geometry {

enum class EventKind { Rising, Setting };

/// One occultation event: a satellite arc near or below the horizon.
struct OccultationEvent {
  SatId sat;
  Epoch t_start;
  Epoch t_end;
  EventKind kind = EventKind::Setting;
  double min_elevation = 0.0;  // rad
  double tangent_lat = 0.0;    // rad, at the lowest-elevation epoch
  double tangent_lon = 0.0;    // rad
};

struct EventScanConfig {
  double scan_dt = 10.0;                          // s
  double elev_high = 5.0 * constants::deg;        // event opens below this
  double elev_low = -6.0 * constants::deg;        // loss-of-signal threshold
};

/// Scan each satellite's elevation from the platform over the trajectory
/// span. A setting event opens when the elevation drops below elev_high
/// while decreasing; a rising event opens while below elev_high and
/// increasing. Events close at elev_low, at an elevation-rate sign reversal,
/// or at the span edge. The tangent point is the closest approach of the
/// straight ray to the ellipsoid at the lowest-elevation epoch.
std::vector<OccultationEvent> detect_events(
    const StateProvider& platform, const Epoch& t_begin, const Epoch& t_end,
    const std::vector<std::pair<SatId, StateProvider>>& satellites,
    const EventScanConfig& cfg = {});

/// Geodetic coordinates of the straight-line tangent point (closest approach
/// of segment rx->tx to the ellipsoid surface).
GeodeticPos straight_ray_tangent_point(const EcefVec& rx, const EcefVec& tx);

}  // namespace gnssro::geometry

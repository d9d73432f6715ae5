#pragma once

// Shared synthetic scenario: an 18 km balloon watching one GPS-like
// satellite set behind the limb (the occulting arc) while another sits high
// (the clock reference). Planar geometry on the equator keeps the numbers
// easy to reason about.

#include "gnssro/atmosphere/model.hpp"
#include "gnssro/core/constants.hpp"
#include "gnssro/geometry/kepler.hpp"
#include "gnssro/geometry/trajectory.hpp"
#include "gnssro/raytracer/simulate.hpp"

namespace support {

namespace constants = gnssro::constants;

inline constexpr double kSurfaceRadius = 6371000.0;
inline constexpr double kBalloonRadius = kSurfaceRadius + 18000.0;
inline const gnssro::Epoch kT0{2120, 345600.0};

inline gnssro::atmosphere::AtmosphereModel standard_model() {
  return gnssro::atmosphere::AtmosphereModel::exponential(300.0, 7000.0, kSurfaceRadius);
}

inline gnssro::EcefVec balloon_position() { return {kBalloonRadius, 0.0, 0.0}; }

inline gnssro::geometry::StateProvider balloon_provider() {
  return gnssro::geometry::provider_hover(balloon_position());
}

/// Equatorial circular orbit placed so the satellite's geocentric angle from
/// the balloon is angle0 at kT0 and grows at the mean motion.
inline gnssro::geometry::KeplerElements equatorial_orbit(double angle0) {
  gnssro::geometry::KeplerElements el;
  el.a = 26560e3;
  el.e = 0.0;
  el.i = 0.0;
  el.raan = 0.0;
  el.argp = 0.0;
  el.m0 = angle0;
  el.epoch = kT0;
  return el;
}

/// Setting occultation: straight-line elevation sweeps from about +1.5 deg
/// down through the paper-like minimum near -5.5 deg over ~870 s.
inline gnssro::geometry::KeplerElements occulting_orbit() { return equatorial_orbit(1.301); }
inline constexpr double kOccultationDuration = 870.0;

/// High reference arc (mean elevation ~55 deg over the same window).
inline gnssro::geometry::KeplerElements reference_orbit() { return equatorial_orbit(0.45); }

inline gnssro::SatId occulting_sat() {
  return {gnssro::Constellation::GPS, 7};
}
inline gnssro::SatId reference_sat() {
  return {gnssro::Constellation::GPS, 23};
}

inline gnssro::raytracer::SimSeries simulate_occulting(double dt = 1.0) {
  return gnssro::raytracer::simulate_occultation(
      standard_model(), gnssro::geometry::provider_from_elements(occulting_orbit()),
      balloon_provider(), occulting_sat(), kT0, kOccultationDuration, dt);
}

inline gnssro::raytracer::SimSeries simulate_reference(double dt = 1.0) {
  return gnssro::raytracer::simulate_occultation(
      standard_model(), gnssro::geometry::provider_from_elements(reference_orbit()),
      balloon_provider(), reference_sat(), kT0, kOccultationDuration, dt);
}

}  // namespace support

#pragma once

#include "gnssro/core/constants.hpp"
#include "gnssro/ingest/types.hpp"

namespace gnssro::geometry {

/// Two-body orbital elements for simulated transmitters. Propagated in the
/// working (ECEF) frame directly; simulation scenarios ignore frame rotation
/// for the orbit itself, so a scenario is self-consistent end to end.
struct KeplerElements {
  double a = 26560e3;   // semi-major axis, m
  double e = 0.0;       // eccentricity, [0, 1)
  double i = 0.0;       // inclination, rad
  double raan = 0.0;    // right ascension of ascending node, rad
  double argp = 0.0;    // argument of perigee, rad
  double m0 = 0.0;      // mean anomaly at epoch, rad
  Epoch epoch;
  double mu = constants::earth_gm;  // m^3/s^2

  double period() const;
};

/// Two-body propagation. Kepler's equation solved by Newton iteration to
/// |dE| < 1e-12; throws Error after 50 iterations without convergence.
SatState kepler_state(const KeplerElements& el, const Epoch& t);

}  // namespace gnssro::geometry

#pragma once

// Test-side oracles, independent of the production numerical routes they
// check. The ray oracle integrates the ray ODE in arclength (no singular
// integrals, no impact-parameter quadrature); the bending oracle uses
// trapezoid sums with Richardson extrapolation in a different substitution;
// Kepler's equation is solved by bisection.

#include "gnssro/atmosphere/model.hpp"
#include "gnssro/geometry/kepler.hpp"
#include "gnssro/geometry/trajectory.hpp"

namespace oracles {

struct RayPath {
  double alpha = 0.0;           // accumulated bending over the integrated leg, rad
  double theta = 0.0;           // geocentric angle traversed, rad
  double optical_excess = 0.0;  // Int (n-1) ds, m
  double geometric_length = 0.0;
  double bouguer_drift = 0.0;   // max |n r sin(phi) - a| / a
  double r_end = 0.0;
};

/// RK4 integration of the polar ray equations
///   dr/ds = cos(phi), dtheta/ds = sin(phi)/r,
///   dphi/ds = -sin(phi) (1/r + n'/n)
/// from (r_start, phi_start) until r reaches r_stop (ascending).
RayPath integrate_ray(const gnssro::atmosphere::AtmosphereModel& model, double r_start,
                      double phi_start, double r_stop, double ds = 25.0);

/// One-sided bending from the tangent point of impact parameter a up to
/// radius r_stop, via the ray ODE (starts at phi = pi/2 on the tangent
/// circle).
RayPath integrate_from_tangent(const gnssro::atmosphere::AtmosphereModel& model, double a,
                               double r_stop, double ds = 25.0);

/// Trapezoid + Richardson評 bending integral in the substitution x = a + t^2
/// (independent of the production cosh route).
double bending_trapezoid(const gnssro::atmosphere::AtmosphereModel& model, double a, double x_lo,
                         double x_hi, int base_points = 4096);

/// Kepler's equation solved by bisection, with an independently coded
/// perifocal-to-frame rotation.
gnssro::SatState kepler_bisection(const gnssro::geometry::KeplerElements& el,
                                  const gnssro::Epoch& t);

/// Light-cone solution by dense bisection on tau: |R3(w tau) p(t-tau) - rx|
/// = c tau.
double light_time_bisection(const gnssro::EcefVec& rx_pos,
                            const gnssro::geometry::StateProvider& tx, const gnssro::Epoch& t_rx,
                            double omega_earth);

}  // namespace oracles

#pragma once

#include "gnssro/atmosphere/model.hpp"

namespace gnssro::raytracer {

struct BendingConfig {
  double rel_tol = 1e-9;       // quadrature doubling tolerance (spec floor 1e-6)
  double abs_tol = 1e-14;      // rad
  double top_eps_n = 1e-10;    // N-units treated as vacuum
};

/// One-sided bending accumulated between refractional radii [x_lo, x_hi] by
/// a ray with impact parameter a:
///
///   alpha = -a * Int_{max(a, x_lo)}^{x_hi} (d ln n / dx) / sqrt(x^2 - a^2) dx
///
/// The sqrt singularity at x = a is removed by the substitution
/// x = a*cosh(u), after which 20-point Gauss-Legendre panels with a doubling
/// check integrate a smooth function of u. Throws Error when x(r) is not
/// strictly increasing over the span (super-refraction).
double bending_partial(const atmosphere::AtmosphereModel& model, double a, double x_lo,
                       double x_hi, const BendingConfig& cfg = {});

}  // namespace gnssro::raytracer

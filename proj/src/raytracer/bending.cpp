#include "gnssro/raytracer/bending.hpp"

#include <cmath>

#include "gnssro/core/error.hpp"
#include "gnssro/util/quadrature.hpp"

namespace gnssro::raytracer {

double bending_partial(const atmosphere::AtmosphereModel& model, double a, double x_lo,
                       double x_hi, const BendingConfig& cfg) {
  if (a <= 0.0) throw Error("bending_partial: impact parameter must be positive");
  if (model.is_vacuum()) return 0.0;

  // Nothing bends above the effective top of the atmosphere.
  const double r_top = model.top_radius(cfg.top_eps_n);
  const double x_top = model.refractional_radius(r_top);
  const double lo = std::max(a, x_lo);
  const double hi = std::min(x_hi, x_top);
  if (hi <= lo) return 0.0;

  // Super-refraction guard: x(r) must be strictly increasing on the span.
  const double r_lo = model.radius_from_refractional(lo);
  const double r_hi = model.radius_from_refractional(hi);
  if (auto bad = model.super_refraction_interval(r_lo, r_hi)) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "bending_partial: super-refraction in radius interval [%.3f, %.3f] m",
                  bad->first, bad->second);
    throw Error(msg);
  }

  // x = a*cosh(u) removes the sqrt singularity at the tangent point:
  //   alpha = -a Int (dln n/dx) / sqrt(x^2-a^2) dx  ->  -a Int g(x(u)) du
  // with g = (dn/dr) / (n (n + r dn/dr)).
  const double u_lo = std::acosh(std::max(1.0, lo / a));
  const double u_hi = std::acosh(hi / a);
  auto integrand = [&](double u) {
    const double x = a * std::cosh(u);
    const double r = model.radius_from_refractional(x);
    const auto q = model.eval(r);
    return q.dn_dr / (q.n * (q.n + r * q.dn_dr));
  };
  const auto quad = util::integrate(integrand, u_lo, u_hi, cfg.rel_tol, cfg.abs_tol / a);
  return -a * quad.value;
}

}  // namespace gnssro::raytracer

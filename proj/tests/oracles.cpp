#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

#include "gnssro/core/constants.hpp"

namespace oracles {

using gnssro::EcefVec;
using gnssro::Epoch;
using gnssro::SatState;
using gnssro::atmosphere::AtmosphereModel;
namespace constants = gnssro::constants;

namespace {

struct RayState {
  double r, theta, phi;
};

RayState derivs(const AtmosphereModel& model, const RayState& y) {
  const auto q = model.eval(y.r);
  RayState d;
  d.r = std::cos(y.phi);
  d.theta = std::sin(y.phi) / y.r;
  d.phi = -std::sin(y.phi) * (1.0 / y.r + q.dn_dr / q.n);
  return d;
}

}  // namespace

RayPath integrate_ray(const AtmosphereModel& model, double r_start, double phi_start,
                      double r_stop, double ds) {
  RayState y{r_start, 0.0, phi_start};
  const double a0 = model.eval(y.r).n * y.r * std::sin(y.phi);
  RayPath out;
  double s = 0.0;
  const double s_max = 4.0e7;

  auto rk4_step = [&](const RayState& y0, double h) {
    const RayState k1 = derivs(model, y0);
    const RayState y1{y0.r + 0.5 * h * k1.r, y0.theta + 0.5 * h * k1.theta,
                      y0.phi + 0.5 * h * k1.phi};
    const RayState k2 = derivs(model, y1);
    const RayState y2{y0.r + 0.5 * h * k2.r, y0.theta + 0.5 * h * k2.theta,
                      y0.phi + 0.5 * h * k2.phi};
    const RayState k3 = derivs(model, y2);
    const RayState y3{y0.r + h * k3.r, y0.theta + h * k3.theta, y0.phi + h * k3.phi};
    const RayState k4 = derivs(model, y3);
    return RayState{y0.r + h / 6.0 * (k1.r + 2 * k2.r + 2 * k3.r + k4.r),
                    y0.theta + h / 6.0 * (k1.theta + 2 * k2.theta + 2 * k3.theta + k4.theta),
                    y0.phi + h / 6.0 * (k1.phi + 2 * k2.phi + 2 * k3.phi + k4.phi)};
  };

  while (y.r < r_stop && s < s_max) {
    // Shrink the final step to land on r_stop.
    double h = ds;
    const double dr = std::cos(y.phi);
    if (dr > 1e-12) {
      const double remaining = (r_stop - y.r) / dr;
      if (remaining < h) h = std::max(remaining, 1e-6);
    }
    const RayState y_next = rk4_step(y, h);

    // Accumulate path integrals with midpoint values.
    const double r_mid = 0.5 * (y.r + y_next.r);
    const double n_mid = model.eval(r_mid).n;
    out.geometric_length += h;
    out.optical_excess += (n_mid - 1.0) * h;

    y = y_next;
    s += h;
    const double bouguer = model.eval(y.r).n * y.r * std::sin(y.phi);
    out.bouguer_drift = std::max(out.bouguer_drift, std::abs(bouguer - a0) / std::abs(a0));
  }
  out.alpha = (y.theta + y.phi) - phi_start;
  out.theta = y.theta;
  out.r_end = y.r;
  return out;
}

RayPath integrate_from_tangent(const AtmosphereModel& model, double a, double r_stop,
                               double ds) {
  const double r_tan = model.radius_from_refractional(a);
  return integrate_ray(model, r_tan, constants::pi / 2.0, r_stop, ds);
}

double bending_trapezoid(const AtmosphereModel& model, double a, double x_lo, double x_hi,
                         int base_points) {
  const double lo = std::max(a, x_lo);
  if (x_hi <= lo) return 0.0;
  // x = a + t^2 puts the tangent singularity at t = 0 with a finite
  // integrand: -2a g(x) / sqrt(x + a), g = dln n/dx.
  const double t_lo = std::sqrt(lo - a);
  const double t_hi = std::sqrt(x_hi - a);
  auto f = [&](double t) {
    const double x = a + t * t;
    const double r = model.radius_from_refractional(x);
    const auto q = model.eval(r);
    const double g = q.dn_dr / (q.n * (q.n + r * q.dn_dr));
    return -2.0 * a * g / std::sqrt(x + a);
  };
  auto trapezoid = [&](int n) {
    const double h = (t_hi - t_lo) / n;
    double sum = 0.5 * (f(t_lo) + f(t_hi));
    for (int i = 1; i < n; ++i) sum += f(t_lo + i * h);
    return sum * h;
  };
  const double t1 = trapezoid(base_points);
  const double t2 = trapezoid(2 * base_points);
  const double t4 = trapezoid(4 * base_points);
  // Two Richardson levels (Romberg).
  const double r1 = (4.0 * t2 - t1) / 3.0;
  const double r2 = (4.0 * t4 - t2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

SatState kepler_bisection(const gnssro::geometry::KeplerElements& el, const Epoch& t) {
  const double n = std::sqrt(el.mu / (el.a * el.a * el.a));
  double m = std::fmod(el.m0 + n * gnssro::diff_seconds(t, el.epoch), 2.0 * constants::pi);
  if (m < 0.0) m += 2.0 * constants::pi;

  double lo = 0.0, hi = 2.0 * constants::pi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = mid - el.e * std::sin(mid) - m;
    if (f > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double ecc = 0.5 * (lo + hi);

  const double ce = std::cos(ecc), se = std::sin(ecc);
  const double b = std::sqrt(1.0 - el.e * el.e);
  const double xp = el.a * (ce - el.e);
  const double yp = el.a * b * se;
  const double r = el.a * (1.0 - el.e * ce);
  const double a_edot = n * el.a * el.a / r;
  const double vxp = -a_edot * se;
  const double vyp = a_edot * b * ce;

  // Rotation via an explicit 3-1-3 matrix product, coded independently.
  const double cw = std::cos(el.argp), sw = std::sin(el.argp);
  const double ci = std::cos(el.i), si = std::sin(el.i);
  const double co = std::cos(el.raan), so = std::sin(el.raan);
  double rot[3][3];
  rot[0][0] = co * cw - so * sw * ci;
  rot[0][1] = -co * sw - so * cw * ci;
  rot[0][2] = so * si;
  rot[1][0] = so * cw + co * sw * ci;
  rot[1][1] = -so * sw + co * cw * ci;
  rot[1][2] = -co * si;
  rot[2][0] = sw * si;
  rot[2][1] = cw * si;
  rot[2][2] = ci;

  SatState s;
  s.t = t;
  s.pos = EcefVec{rot[0][0] * xp + rot[0][1] * yp, rot[1][0] * xp + rot[1][1] * yp,
                  rot[2][0] * xp + rot[2][1] * yp};
  s.vel = EcefVec{rot[0][0] * vxp + rot[0][1] * vyp, rot[1][0] * vxp + rot[1][1] * vyp,
                  rot[2][0] * vxp + rot[2][1] * vyp};
  return s;
}

double light_time_bisection(const EcefVec& rx_pos, const gnssro::geometry::StateProvider& tx,
                            const Epoch& t_rx, double omega_earth) {
  auto f = [&](double tau) {
    const SatState s = tx(gnssro::advance(t_rx, -tau));
    const double ang = omega_earth * tau;
    const double c = std::cos(ang), sn = std::sin(ang);
    const EcefVec rotated{c * s.pos.x() + sn * s.pos.y(), -sn * s.pos.x() + c * s.pos.y(),
                          s.pos.z()};
    return (rx_pos - rotated).norm() - constants::c_light * tau;
  };
  double lo = 0.0, hi = 0.2;
  if (f(lo) < 0.0 || f(hi) > 0.0) throw std::runtime_error("light_time_bisection: no bracket");
  for (int it = 0; it < 64; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracles

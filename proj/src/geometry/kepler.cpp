#include "gnssro/geometry/kepler.hpp"

#include <cmath>

#include "gnssro/core/error.hpp"

namespace gnssro::geometry {

using constants::pi;

double KeplerElements::period() const { return 2.0 * pi * std::sqrt(a * a * a / mu); }

SatState kepler_state(const KeplerElements& el, const Epoch& t) {
  if (el.a <= 0.0 || el.e < 0.0 || el.e >= 1.0) {
    throw Error("kepler_state: invalid elements");
  }
  const double n = std::sqrt(el.mu / (el.a * el.a * el.a));
  const double dt = diff_seconds(t, el.epoch);
  double m = std::fmod(el.m0 + n * dt, 2.0 * pi);
  if (m < 0.0) m += 2.0 * pi;

  // Kepler's equation by Newton, seeded with M (fine for e < 1).
  double ecc_anom = el.e < 0.8 ? m : pi;
  bool converged = false;
  for (int it = 0; it < 50; ++it) {
    const double f = ecc_anom - el.e * std::sin(ecc_anom) - m;
    const double fp = 1.0 - el.e * std::cos(ecc_anom);
    const double step = f / fp;
    ecc_anom -= step;
    if (std::abs(step) < 1e-12) {
      converged = true;
      break;
    }
  }
  if (!converged) throw Error("kepler_state: Kepler equation did not converge");

  const double ce = std::cos(ecc_anom), se = std::sin(ecc_anom);
  const double sqrt_1me2 = std::sqrt(1.0 - el.e * el.e);
  // Perifocal coordinates and rates.
  const double r = el.a * (1.0 - el.e * ce);
  const double xp = el.a * (ce - el.e);
  const double yp = el.a * sqrt_1me2 * se;
  const double a_edot = n * el.a * el.a / r;  // a * dE/dt
  const double vxp = -a_edot * se;
  const double vyp = a_edot * sqrt_1me2 * ce;

  const double cw = std::cos(el.argp), sw = std::sin(el.argp);
  const double co = std::cos(el.raan), so = std::sin(el.raan);
  const double ci = std::cos(el.i), si = std::sin(el.i);

  // PQW -> working frame rotation, columns are P and Q.
  const EcefVec p_axis{co * cw - so * sw * ci, so * cw + co * sw * ci, sw * si};
  const EcefVec q_axis{-co * sw - so * cw * ci, -so * sw + co * cw * ci, cw * si};

  SatState s;
  s.t = t;
  s.pos = xp * p_axis + yp * q_axis;
  s.vel = vxp * p_axis + vyp * q_axis;
  return s;
}

}  // namespace gnssro::geometry

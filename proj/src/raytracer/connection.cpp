#include "gnssro/raytracer/connection.hpp"

#include <algorithm>
#include <cmath>

#include "gnssro/core/constants.hpp"
#include "gnssro/core/error.hpp"
#include "gnssro/util/quadrature.hpp"

namespace gnssro::raytracer {

namespace {

// Geometric length and optical excess of a monotone ray leg between
// refractional radii [x_from, x_to] at impact parameter a. Above x_up the
// medium is treated as vacuum and handled analytically.
struct LegLengths {
  double geometric = 0.0;   // m
  double optical_excess = 0.0;  // Int (n-1) ds, m
};

LegLengths leg_lengths(const atmosphere::AtmosphereModel& model, double a, double x_from,
                       double x_to, double x_up, double rel_tol) {
  LegLengths out;
  if (x_to <= x_from) return out;

  const double atm_hi = std::min(x_to, x_up);
  if (atm_hi > x_from) {
    // ds = x dx / (sqrt(x^2-a^2) (n + r n')); u-substitution as in bending.
    const double u_lo = std::acosh(std::max(1.0, x_from / a));
    const double u_hi = std::acosh(atm_hi / a);
    auto geom = [&](double u) {
      const double x = a * std::cosh(u);
      const double r = model.radius_from_refractional(x);
      const auto q = model.eval(r);
      return x / (q.n + r * q.dn_dr);
    };
    auto excess = [&](double u) {
      const double x = a * std::cosh(u);
      const double r = model.radius_from_refractional(x);
      const auto q = model.eval(r);
      return (q.n - 1.0) * x / (q.n + r * q.dn_dr);
    };
    out.geometric = util::integrate(geom, u_lo, u_hi, rel_tol, 1e-9).value;
    out.optical_excess = util::integrate(excess, u_lo, u_hi, rel_tol, 1e-12).value;
  }
  if (x_to > x_up) {
    const double lo = std::max(x_from, x_up);
    out.geometric += std::sqrt(x_to * x_to - a * a) - std::sqrt(lo * lo - a * a);
  }
  return out;
}

}  // namespace

RayResult solve_connection(const atmosphere::AtmosphereModel& model, const EcefVec& tx_pos,
                           const EcefVec& rx_pos, const ConnectionConfig& cfg) {
  const double r_tx = tx_pos.norm();
  const double r_rx = rx_pos.norm();
  if (r_tx == 0.0 || r_rx == 0.0 || (tx_pos - rx_pos).norm() == 0.0) {
    throw Error("solve_connection: degenerate endpoint geometry");
  }
  const double chord = (tx_pos - rx_pos).norm();
  const double theta = std::atan2(tx_pos.cross(rx_pos).norm(), tx_pos.dot(rx_pos));

  // Lower/upper endpoints; the solve parametrizes the ray by its elevation
  // at the lower one, which is bijective in a and selects the branch.
  const bool rx_is_lower = r_rx <= r_tx;
  const EcefVec& p1 = rx_is_lower ? rx_pos : tx_pos;
  const EcefVec& p2 = rx_is_lower ? tx_pos : rx_pos;
  const double r1 = std::min(r_rx, r_tx);
  const double r2 = std::max(r_rx, r_tx);

  const double n1 = model.eval(r1).n;
  const double n2 = model.eval(r2).n;
  const double x1 = n1 * r1;
  const double x2 = n2 * r2;

  // Straight-line elevation of p2 seen from p1, against the geocentric
  // horizon (the symmetry frame of the model).
  const EcefVec u12 = (p2 - p1) / chord;
  const double elev_straight = std::asin(std::clamp(u12.dot(p1 / r1), -1.0, 1.0));

  RayResult res;

  if (model.is_vacuum()) {
    res.a = p1.cross(u12).norm();
    res.alpha = 0.0;
    res.excess_path = 0.0;
    const double s_foot = -p1.dot(u12);  // arclength to closest approach
    res.tangent_radius = (s_foot > 0.0 && s_foot < chord) ? res.a : r1;
    res.converged = true;
    return res;
  }

  const double r_top = model.top_radius(cfg.bending.top_eps_n);
  const double x_up = model.refractional_radius(r_top);

  auto alpha_of = [&](double eps1) {
    const double a = x1 * std::cos(eps1);
    double alpha = bending_partial(model, a, x1, x2, cfg.bending);
    if (eps1 < 0.0) alpha += 2.0 * bending_partial(model, a, a, x1, cfg.bending);
    return alpha;
  };
  // Angular closure residual: alpha(a) = eps1 - delta2 + theta with
  // cos(delta2) = a/x2 the depression at the upper endpoint.
  auto residual = [&](double eps1) {
    const double a = x1 * std::cos(eps1);
    const double delta2 = std::acos(std::clamp(a / x2, -1.0, 1.0));
    return eps1 - delta2 + theta - alpha_of(eps1);
  };

  // Bracket the root. With dN/dr < 0 the residual is increasing in eps1 and
  // negative at the straight-line elevation.
  double lo = elev_straight - 1e-6;
  double f_lo = residual(lo);
  int expand = 0;
  while (f_lo > 0.0 && expand < 60) {
    lo -= std::max(1e-4, std::abs(elev_straight) * 0.05);
    f_lo = residual(lo);
    ++expand;
  }
  // Terrestrial bending stays far below 0.25 rad; capping the bracket keeps
  // the impact parameter away from the a -> 0 overflow regime.
  const double hi_max = elev_straight + 0.25;
  double step = 5e-4;
  double hi = lo + step;
  double f_hi = residual(hi);
  while (f_hi < 0.0 && hi < hi_max && expand < 120) {
    lo = hi;
    f_lo = f_hi;
    step *= 2.0;
    hi = std::min(hi + step, hi_max);
    f_hi = residual(hi);
    ++expand;
  }
  if (f_lo > 0.0 || f_hi < 0.0) {
    throw Error("solve_connection: no connecting ray (shadow zone or invalid geometry)");
  }

  // Safeguarded secant within the bracket.
  double e_best = lo, f_best = f_lo;
  bool converged = false;
  int it = 0;
  for (; it < cfg.max_iterations; ++it) {
    double e_next;
    if (f_hi != f_lo) {
      e_next = hi - f_hi * (hi - lo) / (f_hi - f_lo);
    } else {
      e_next = 0.5 * (lo + hi);
    }
    if (!(e_next > lo && e_next < hi)) e_next = 0.5 * (lo + hi);
    const double f_next = residual(e_next);
    if (std::abs(f_next) < std::abs(f_best)) {
      e_best = e_next;
      f_best = f_next;
    }
    if (std::abs(f_next) < cfg.residual_tol) {
      converged = true;
      break;
    }
    if (f_next < 0.0) {
      lo = e_next;
      f_lo = f_next;
    } else {
      hi = e_next;
      f_hi = f_next;
    }
    if (hi - lo < 1e-16) break;
  }
  if (!converged && std::abs(f_best) > 1e3 * cfg.residual_tol) {
    throw Error("solve_connection: iteration did not converge");
  }

  const double eps1 = e_best;
  const double a = x1 * std::cos(eps1);
  res.a = a;
  res.alpha = alpha_of(eps1);
  res.iterations = it + 1;
  res.converged = true;

  // Path lengths: excess = Int (n-1) ds + (geometric path - chord).
  LegLengths total;
  if (eps1 < 0.0) {
    const LegLengths down = leg_lengths(model, a, a, x1, x_up, cfg.path_rel_tol);
    const LegLengths up = leg_lengths(model, a, a, x2, x_up, cfg.path_rel_tol);
    total.geometric = down.geometric + up.geometric;
    total.optical_excess = down.optical_excess + up.optical_excess;
    res.tangent_radius = model.radius_from_refractional(a);
  } else {
    total = leg_lengths(model, a, x1, x2, x_up, cfg.path_rel_tol);
    res.tangent_radius = r1;
  }
  res.excess_path = total.optical_excess + (total.geometric - chord);
  return res;
}

}  // namespace gnssro::raytracer

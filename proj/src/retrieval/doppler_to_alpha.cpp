#include "gnssro/retrieval/doppler_to_alpha.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "gnssro/core/error.hpp"

namespace gnssro::retrieval {

double ReceiverRefractivity::resolve(double receiver_radius) const {
  if (in_situ_n) return *in_situ_n;
  if (background) return background->eval(receiver_radius).n;
  if (unity) return 1.0;
  throw Error(
      "doppler_to_bending: no receiver refractivity source (supply in-situ n, a background "
      "model, or request spaceborne unity mode)");
}

BendingAngleProfile doppler_to_bending(const preprocess::ExcessPhaseSeries& series,
                                       const DopplerRetrievalConfig& cfg) {
  preprocess::require_stage(series, preprocess::Stage::Smoothed, "doppler_to_bending");

  BendingAngleProfile profile;
  long attempted = 0;
  long failed = 0;

  for (const auto& ep : series.epochs) {
    if (!ep.valid || !std::isfinite(ep.excess_doppler)) continue;
    ++attempted;

    const EcefVec& rx = ep.rx_state.pos;
    const EcefVec& tx = ep.tx_state.pos;
    const double r_r = rx.norm();
    const double r_t = tx.norm();
    const double n_r = cfg.n_r.resolve(r_r);
    const double n_t = 1.0;  // transmitter effectively in vacuum

    // Occultation-plane reduction: e1 along the receiver radius, e2 the
    // transmitter's in-plane transverse; out-of-plane velocity projects out.
    const EcefVec e1 = rx / r_r;
    EcefVec e2 = tx - tx.dot(e1) * e1;
    const double e2n = e2.norm();
    if (e2n == 0.0) {
      ++failed;
      continue;  // degenerate radial geometry
    }
    e2 /= e2n;
    const double theta = std::atan2(tx.dot(e2), tx.dot(e1));

    const Eigen::Vector2d vr2(ep.rx_state.vel.dot(e1), ep.rx_state.vel.dot(e2));
    const Eigen::Vector2d vt2(ep.tx_state.vel.dot(e1), ep.tx_state.vel.dot(e2));

    // Measured total path rate = geometric range rate + excess Doppler.
    const EcefVec d = rx - tx;
    const double chord = d.norm();
    const EcefVec u_rt = d / chord;
    const double range_rate = u_rt.dot(ep.rx_state.vel - ep.tx_state.vel);
    const double rho_dot = range_rate + ep.excess_doppler;

    // Unknowns: eps (ray arrival elevation at rx), del (ray depression at
    // tx), both against the geocentric horizon in the occultation plane.
    const EcefVec u3 = (tx - rx) / chord;
    double eps = std::asin(std::clamp(u3.dot(rx / r_r), -1.0, 1.0));
    double del = std::asin(std::clamp(u3.dot(tx / r_t), -1.0, 1.0));

    const double st = std::sin(theta), ct = std::cos(theta);
    bool converged = false;
    for (int it = 0; it < cfg.max_iterations; ++it) {
      const double se = std::sin(eps), ce = std::cos(eps);
      const double sd = std::sin(del), cd = std::cos(del);
      // Propagation directions at rx and tx in the (e1, e2) plane.
      const Eigen::Vector2d u_r(-se, -ce);
      const Eigen::Vector2d u_t(-sd * ct + cd * st, -sd * st - cd * ct);

      const double f1 = n_t * r_t * cd - n_r * r_r * ce;
      const double f2 = n_r * vr2.dot(u_r) - n_t * vt2.dot(u_t) - rho_dot;

      Eigen::Matrix2d jac;
      jac(0, 0) = n_r * r_r * se;
      jac(0, 1) = -n_t * r_t * sd;
      jac(1, 0) = n_r * vr2.dot(Eigen::Vector2d(-ce, se));
      jac(1, 1) = -n_t * vt2.dot(Eigen::Vector2d(-cd * ct - sd * st, -cd * st + sd * ct));

      const Eigen::Vector2d step = jac.partialPivLu().solve(Eigen::Vector2d(f1, f2));
      if (!step.allFinite()) break;
      eps -= step(0);
      del -= step(1);
      if (std::abs(step(0)) + std::abs(step(1)) < cfg.newton_tol) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      ++failed;
      continue;
    }

    profile.a.push_back(n_r * r_r * std::cos(eps));
    profile.alpha.push_back(eps - del + theta);
    profile.t.push_back(ep.t);
    profile.quality.push_back(SampleQuality::Good);
  }

  if (attempted == 0) throw Error("doppler_to_bending: no usable epochs");
  if (static_cast<double>(failed) > cfg.max_failed_fraction * static_cast<double>(attempted)) {
    throw Error("doppler_to_bending: more than the allowed fraction of epochs failed");
  }
  profile.sort_ascending();
  return profile;
}

}  // namespace gnssro::retrieval

#pragma once

#include "gnssro/atmosphere/model.hpp"
#include "gnssro/core/geodesy.hpp"
#include "gnssro/raytracer/bending.hpp"

namespace gnssro::raytracer {

/// Solved ray between two endpoints in a spherically symmetric medium.
struct RayResult {
  double a = 0.0;              // impact parameter, m
  double alpha = 0.0;          // total bending, rad
  double tangent_radius = 0.0; // minimum radius along the path, m
  double excess_path = 0.0;    // optical path minus straight-line distance, m
  bool converged = false;
  int iterations = 0;
};

struct ConnectionConfig {
  BendingConfig bending;
  double residual_tol = 1e-11;  // rad, angular closure
  int max_iterations = 100;
  double path_rel_tol = 1e-12;  // quadrature tolerance for path-length integrals
};

/// Find the ray connecting tx_pos and rx_pos through the model: the impact
/// parameter a satisfying the angular closure
///
///   phi_t + phi_r + theta - pi = alpha(a),
///   sin(phi_t) = a/(n_t r_t),  sin(phi_r) = a/(n_r r_r),
///
/// where alpha doubles the below-tangent segment when the tangent sits
/// between the endpoints and adds the one-sided topside segment. Solved by
/// bracketing plus a safeguarded secant on the ray elevation at the lower
/// endpoint (a bijective reparametrization of a that also selects the
/// branch). Throws Error when no connecting ray exists or iteration fails.
RayResult solve_connection(const atmosphere::AtmosphereModel& model, const EcefVec& tx_pos,
                           const EcefVec& rx_pos, const ConnectionConfig& cfg = {});

}  // namespace gnssro::raytracer

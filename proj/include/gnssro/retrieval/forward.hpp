#pragma once

#include "gnssro/raytracer/bending.hpp"
#include "gnssro/retrieval/profiles.hpp"

namespace gnssro::retrieval {

/// Forward integrator: bending angle profile from a 1-D refractivity model
/// for a receiver inside the atmosphere,
///   alpha(a) = 2 * Int[a, x_r] + Int[x_r, x_top]
/// (doubled below-receiver segment plus the one-sided transmitter-side
/// segment). Every a must lie below x_r = n(r_r) * r_r.
BendingAngleProfile forward_bending(const atmosphere::AtmosphereModel& model,
                                    double receiver_radius, const std::vector<double>& a_grid,
                                    const raytracer::BendingConfig& cfg = {});

/// Same, for a retrieved refractivity profile.
BendingAngleProfile forward_bending(const RefractivityProfile& profile, double receiver_radius,
                                    const std::vector<double>& a_grid,
                                    const raytracer::BendingConfig& cfg = {});

}  // namespace gnssro::retrieval

#pragma once

#include "gnssro/raytracer/bending.hpp"
#include "gnssro/retrieval/profiles.hpp"

namespace gnssro::retrieval {

struct AbelConfig {
  raytracer::BendingConfig bending;  // topside forward-integral tolerance
};

/// Finite-limit (partial) Abel inversion for a receiver inside the
/// atmosphere:
///   1. subtract the modeled transmitter-side contribution (one-sided
///      forward integral of `topside` over [x_r, x_top]) from the measured
///      bending, leaving the doubled below-receiver partial bending;
///   2. invert  ln n(a1) - ln n(x_r) =
///        (1/pi) Int_{a1}^{x_r} alpha_p(a) / sqrt(a^2 - a1^2) da
///      with alpha_p interpolated linearly in a and the singularity removed
///      by a = a1*cosh(u) (each panel is then analytic);
///   3. map refractional to geometric radius, r = x / n(x).
///
/// `topside` may be null only when n_r is unity (receiver outside the
/// atmosphere). The profile must be strictly ascending in a with every
/// sample below x_r = n_r * receiver_radius.
RefractivityProfile abel_invert_partial(const BendingAngleProfile& profile,
                                        double receiver_radius, double n_r,
                                        const atmosphere::AtmosphereModel* topside,
                                        const AbelConfig& cfg = {});

}  // namespace gnssro::retrieval

#include "gnssro/retrieval/forward.hpp"

#include "gnssro/core/error.hpp"
#include "gnssro/raytracer/bending.hpp"

namespace gnssro::retrieval {

BendingAngleProfile forward_bending(const atmosphere::AtmosphereModel& model,
                                    double receiver_radius, const std::vector<double>& a_grid,
                                    const raytracer::BendingConfig& cfg) {
  const double x_r = model.refractional_radius(receiver_radius);
  const double x_top = model.refractional_radius(model.top_radius(cfg.top_eps_n));

  BendingAngleProfile out;
  out.a.reserve(a_grid.size());
  out.alpha.reserve(a_grid.size());
  out.quality.reserve(a_grid.size());
  for (double a : a_grid) {
    if (a <= 0.0 || a >= x_r) {
      throw Error("forward_bending: impact parameter grid must lie in (0, x_receiver)");
    }
    const double below = raytracer::bending_partial(model, a, a, x_r, cfg);
    const double topside = raytracer::bending_partial(model, a, x_r, x_top, cfg);
    out.a.push_back(a);
    out.alpha.push_back(2.0 * below + topside);
    out.quality.push_back(SampleQuality::Good);
  }
  return out;
}

BendingAngleProfile forward_bending(const RefractivityProfile& profile, double receiver_radius,
                                    const std::vector<double>& a_grid,
                                    const raytracer::BendingConfig& cfg) {
  return forward_bending(model_from_profile(profile), receiver_radius, a_grid, cfg);
}

}  // namespace gnssro::retrieval

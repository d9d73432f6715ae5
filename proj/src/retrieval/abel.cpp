#include "gnssro/retrieval/abel.hpp"

#include <cmath>

#include "gnssro/core/constants.hpp"
#include "gnssro/core/error.hpp"
#include "gnssro/raytracer/bending.hpp"

namespace gnssro::retrieval {

RefractivityProfile abel_invert_partial(const BendingAngleProfile& profile,
                                        double receiver_radius, double n_r,
                                        const atmosphere::AtmosphereModel* topside,
                                        const AbelConfig& cfg) {
  const size_t n = profile.size();
  if (n < 2) throw Error("abel_invert_partial: need at least two samples");
  const double x_r = n_r * receiver_radius;
  for (size_t i = 0; i < n; ++i) {
    if (i > 0 && profile.a[i] <= profile.a[i - 1]) {
      throw Error("abel_invert_partial: impact parameters not strictly ascending");
    }
    if (profile.a[i] >= x_r) {
      throw Error("abel_invert_partial: sample at or above the receiver refractional radius");
    }
    if (!std::isfinite(profile.alpha[i])) {
      throw Error("abel_invert_partial: non-finite bending sample");
    }
  }
  if (!topside && n_r > 1.0 + 1e-12) {
    throw Error(
        "abel_invert_partial: receiver inside the atmosphere requires a topside model for the "
        "transmitter-side completion");
  }

  // Step 1: remove the modeled transmitter-side (topside) bending,
  // leaving the doubled below-receiver partial bending.
  std::vector<double> a_grid(profile.a);
  std::vector<double> alpha_p(n);
  double x_top = x_r;
  if (topside) {
    x_top = topside->refractional_radius(topside->top_radius(cfg.bending.top_eps_n));
  }
  for (size_t i = 0; i < n; ++i) {
    double correction = 0.0;
    if (topside && x_top > x_r) {
      correction = raytracer::bending_partial(*topside, a_grid[i], x_r, x_top, cfg.bending);
    }
    alpha_p[i] = profile.alpha[i] - correction;
  }

  // The partial bending vanishes continuously at a = x_r.
  a_grid.push_back(x_r);
  alpha_p.push_back(0.0);

  // Step 2: finite-limit Abel integral, exact per linear panel under
  // a = a1*cosh(u):   Int (c0 + c1 a) du = c0 du + c1 a1 d(sinh u).
  RefractivityProfile out;
  out.receiver_radius = receiver_radius;
  out.n_receiver = n_r;
  out.topside_id = topside ? "background" : "none";
  out.r.reserve(n);
  out.big_n.reserve(n);

  for (size_t i = 0; i < n; ++i) {
    const double a1 = a_grid[i];
    double integral = 0.0;
    for (size_t j = i; j + 1 < a_grid.size(); ++j) {
      const double aj = a_grid[j], ak = a_grid[j + 1];
      const double c1 = (alpha_p[j + 1] - alpha_p[j]) / (ak - aj);
      const double c0 = alpha_p[j] - c1 * aj;
      const double uj = (j == i) ? 0.0 : std::acosh(std::max(1.0, aj / a1));
      const double uk = std::acosh(std::max(1.0, ak / a1));
      const double shj = std::sqrt(std::max((aj / a1) * (aj / a1) - 1.0, 0.0));
      const double shk = std::sqrt(std::max((ak / a1) * (ak / a1) - 1.0, 0.0));
      integral += c0 * (uk - uj) + c1 * a1 * (shk - shj);
    }
    const double ln_n = std::log(n_r) + integral / constants::pi;
    const double n_i = std::exp(ln_n);
    out.r.push_back(a1 / n_i);  // step 3: r = x / n(x)
    out.big_n.push_back((n_i - 1.0) * 1e6);
  }
  return out;
}

}  // namespace gnssro::retrieval

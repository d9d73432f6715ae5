#include "gnssro/retrieval/compare.hpp"

#include <algorithm>
#include <cmath>

#include "gnssro/core/error.hpp"

namespace gnssro::retrieval {

std::vector<CompareBand> compare_refractivity(const RefractivityProfile& retrieved,
                                              const RefractivityProfile& reference,
                                              const std::vector<double>& band_edges,
                                              double surface_radius) {
  if (retrieved.size() == 0 || reference.size() < 2) {
    throw Error("compare_refractivity: empty profile");
  }
  if (band_edges.size() < 2) throw Error("compare_refractivity: need at least one band");

  const double lo = std::max(retrieved.r.front(), reference.r.front());
  const double hi = std::min(retrieved.r.back(), reference.r.back());
  if (hi <= lo) throw Error("compare_refractivity: profiles do not overlap in radius");

  auto ref_at = [&](double r) {
    auto it = std::upper_bound(reference.r.begin(), reference.r.end(), r);
    size_t k = std::clamp<size_t>(it - reference.r.begin(), 1, reference.size() - 1);
    const double w = (r - reference.r[k - 1]) / (reference.r[k] - reference.r[k - 1]);
    return reference.big_n[k - 1] + w * (reference.big_n[k] - reference.big_n[k - 1]);
  };

  std::vector<CompareBand> bands(band_edges.size() - 1);
  for (size_t b = 0; b + 1 < band_edges.size(); ++b) {
    bands[b].h_lo = band_edges[b];
    bands[b].h_hi = band_edges[b + 1];
  }

  for (size_t i = 0; i < retrieved.size(); ++i) {
    const double r = retrieved.r[i];
    if (r < lo || r > hi) continue;
    const double h = r - surface_radius;
    auto it = std::upper_bound(band_edges.begin(), band_edges.end(), h);
    if (it == band_edges.begin() || it == band_edges.end()) continue;
    CompareBand& band = bands[(it - band_edges.begin()) - 1];
    const double ref_n = ref_at(r);
    if (ref_n == 0.0) continue;
    const double frac = 100.0 * (retrieved.big_n[i] - ref_n) / ref_n;
    band.mean_percent += frac;
    band.rms_percent += frac * frac;
    ++band.count;
  }
  for (auto& band : bands) {
    if (band.count > 0) {
      band.mean_percent /= static_cast<double>(band.count);
      band.rms_percent = std::sqrt(band.rms_percent / static_cast<double>(band.count));
    }
  }
  return bands;
}

}  // namespace gnssro::retrieval

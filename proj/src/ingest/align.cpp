#include "gnssro/ingest/align.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

namespace gnssro::ingest {

namespace {

// Index of the platform state nearest in time to t, or -1 when the list is
// empty.
long nearest_state(const std::vector<double>& times, double t) {
  if (times.empty()) return -1;
  auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return 0;
  if (it == times.end()) return static_cast<long>(times.size()) - 1;
  const long hi = static_cast<long>(it - times.begin());
  return (t - times[hi - 1] <= times[hi] - t) ? hi - 1 : hi;
}

std::string make_event_id(const SatId& sat, const Epoch& t0) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s_w%04d_t%06d", sat.str().c_str(), t0.week,
                static_cast<int>(t0.tow));
  return buf;
}

}  // namespace

AlignResult align_epochs(const std::vector<ObsEpoch>& obs,
                         const std::vector<PlatformState>& platform,
                         const EphemerisTable& ephem, const AlignConfig& cfg) {
  AlignResult out;

  std::vector<double> ptimes(platform.size());
  for (size_t i = 0; i < platform.size(); ++i) ptimes[i] = total_seconds(platform[i].t);

  std::map<SatId, std::vector<ObsEpoch>> by_sat;
  for (const auto& o : obs) by_sat[o.sat].push_back(o);

  // Sampling-density sanity: platform sparser than obs by >10x is suspect.
  if (obs.size() > 1 && platform.size() > 1) {
    const double obs_span =
        total_seconds(obs.back().t) - total_seconds(obs.front().t);
    const double plat_span = ptimes.back() - ptimes.front();
    if (obs_span > 0 && plat_span > 0) {
      const double obs_dt = obs_span / static_cast<double>(obs.size() - 1);
      const double plat_dt = plat_span / static_cast<double>(platform.size() - 1);
      if (plat_dt > 10.0 * obs_dt) {
        out.stats.warnings.push_back("platform sampling sparser than obs by >10x");
      }
    }
  }

  for (auto& [sat, arc] : by_sat) {
    std::stable_sort(arc.begin(), arc.end(), [](const ObsEpoch& a, const ObsEpoch& b) {
      return total_seconds(a.t) < total_seconds(b.t);
    });

    OccultationDataset ds;
    ds.sat = sat;
    double prev_t = -1.0;
    auto flush = [&]() {
      if (!ds.obs.empty()) {
        ds.event_id = make_event_id(sat, ds.obs.front().t);
        if (const auto* e = ephem.find(sat)) ds.ephem = *e;
        out.datasets.push_back(std::move(ds));
      }
      ds = OccultationDataset{};
      ds.sat = sat;
    };

    for (const auto& o : arc) {
      const double t = total_seconds(o.t);
      const long pi = nearest_state(ptimes, t);
      if (pi < 0 || std::abs(ptimes[pi] - t) > cfg.tolerance_s) {
        ++out.stats.unpaired_obs;
        continue;
      }
      if (!ds.obs.empty() && t - prev_t > cfg.gap_split_s) flush();
      ds.obs.push_back(o);
      ds.platform.push_back(platform[pi]);
      prev_t = t;
    }
    flush();
  }
  return out;
}

}  // namespace gnssro::ingest

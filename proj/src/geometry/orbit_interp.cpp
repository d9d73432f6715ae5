#include "gnssro/geometry/orbit_interp.hpp"

#include <algorithm>
#include <cmath>

#include "gnssro/core/error.hpp"

namespace gnssro::geometry {

SatState interpolate_sat_state(const std::vector<EphemerisSample>& table, const Epoch& t,
                               int order) {
  const int n = order + 1;
  if (static_cast<int>(table.size()) < n) {
    throw Error("interpolate_sat_state: table shorter than order+1 samples");
  }
  const double tt = total_seconds(t);
  const double t_first = total_seconds(table.front().t);
  const double t_last = total_seconds(table.back().t);
  if (tt < t_first - 1e-9 || tt > t_last + 1e-9) {
    throw Error("interpolate_sat_state: epoch outside table span (no extrapolation)");
  }

  // Window of n samples centered on t.
  auto it = std::lower_bound(table.begin(), table.end(), tt,
                             [](const EphemerisSample& s, double v) {
                               return total_seconds(s.t) < v;
                             });
  long center = it - table.begin();
  long lo = std::clamp(center - n / 2, 0L, static_cast<long>(table.size()) - n);

  // Times relative to the window start via week-aware differences (the raw
  // epoch magnitude would cost ~1e-6 s of precision), then centered on the
  // window midpoint to keep the basis well conditioned.
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) x[j] = diff_seconds(table[lo + j].t, table[lo].t);
  const double half_span = 0.5 * x[n - 1];
  for (int j = 0; j < n; ++j) x[j] -= half_span;
  const double xq = diff_seconds(t, table[lo].t) - half_span;

  SatState s;
  s.t = t;
  s.pos.setZero();
  s.vel.setZero();
  for (int j = 0; j < n; ++j) {
    // L_j(xq) and L_j'(xq).
    double lj = 1.0;
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      lj *= (xq - x[k]) / (x[j] - x[k]);
    }
    double dlj = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      double term = 1.0 / (x[j] - x[k]);
      for (int m = 0; m < n; ++m) {
        if (m == j || m == k) continue;
        term *= (xq - x[m]) / (x[j] - x[m]);
      }
      dlj += term;
    }
    s.pos += lj * table[lo + j].pos;
    s.vel += dlj * table[lo + j].pos;
  }
  return s;
}

}  // namespace gnssro::geometry

#pragma once

#include <vector>

#include "gnssro/ingest/types.hpp"

namespace gnssro::geometry {

/// Interpolate a precise-ephemeris table at t: position by Lagrange
/// interpolation of the given order on a window centered at t, velocity from
/// the analytic derivative of the interpolating polynomial (finite
/// differences would add ~1e-2 m/s noise that corrupts excess Doppler).
/// Throws Error when t falls outside the table span or the table is shorter
/// than order+1 samples. No extrapolation.
SatState interpolate_sat_state(const std::vector<EphemerisSample>& table, const Epoch& t,
                               int order = 10);

}  // namespace gnssro::geometry

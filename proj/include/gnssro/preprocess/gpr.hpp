#pragma once

#include "gnssro/core/constants.hpp"
#include "gnssro/preprocess/series.hpp"

namespace gnssro::preprocess {

/// Squared-exponential GP smoother configuration. signal_sigma = 0 means
/// "use the sample standard deviation of the detrended input".
struct GprConfig {
  double length_scale = 5.0;                            // s
  double signal_sigma = 0.0;                            // m; 0 = auto
  double noise_sigma = 0.003 * constants::lambda_l1;    // m
  int chunk = 512;     // samples per GP solve
  int overlap = 64;    // cross-fade samples between chunks; chunk > 2*overlap
};

/// Step four: replace the excess phase with the GP posterior mean (SE kernel
/// + white noise, on top of a global quadratic detrend), populate excess
/// Doppler from the analytic posterior-mean derivative, and store the
/// posterior standard deviation per epoch. Long series are processed in
/// overlapping chunks cross-faded in the overlap, keeping cost linear in
/// series length. Throws Error when the kernel matrix stays non-positive
/// definite after jitter escalation.
ExcessPhaseSeries gpr_smooth(const ExcessPhaseSeries& s, const GprConfig& cfg = {});

}  // namespace gnssro::preprocess

#pragma once

#include <vector>

#include "gnssro/preprocess/series.hpp"

namespace gnssro::preprocess {

struct SlipEvent {
  Epoch t;                  // epoch of the later sample of the offending pair
  double jump_m = 0.0;      // residual first-difference that triggered it
  int corrected_cycles = 0; // integer cycles applied to subsequent samples
};

struct SlipReport {
  std::vector<SlipEvent> entries;
  bool quadratic_fallback = false;  // exponential fit diverged
  int passes = 0;
};

struct CycleSlipConfig {
  double mad_factor = 6.0;
  double floor_wavelengths = 0.5;  // detection floor, in L1 wavelengths
  int max_passes = 5;
  size_t min_samples = 20;
};

/// Step three: fit y = A + B*exp(C*(t-t0)) to the calibrated series, flag
/// residual first-differences above max(mad_factor*MAD, floor*lambda_L1) as
/// cycle slips, correct each by the nearest integer number of wavelengths
/// applied to all subsequent samples, and iterate fit-detect-correct until
/// clean. Falls back to a quadratic trend when the exponential fit diverges.
std::pair<ExcessPhaseSeries, SlipReport> correct_cycle_slips(const ExcessPhaseSeries& s,
                                                             const CycleSlipConfig& cfg = {});

}  // namespace gnssro::preprocess

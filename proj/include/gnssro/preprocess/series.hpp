#pragma once

#include <string>
#include <vector>

#include "gnssro/ingest/types.hpp"

namespace gnssro::preprocess {

/// Processing stage of an ExcessPhaseSeries. Operations accept exactly one
/// input stage and advance it one step; enforced at runtime.
enum class Stage { Raw, Calibrated, SlipCorrected, Smoothed };

const char* stage_name(Stage s);

enum class EpochFlag { Ok, Gap, SlipCorrected, Interpolated };

struct ExcessPhaseEpoch {
  Epoch t;
  bool valid = true;             // false == gap (no geometry / no reference)
  EpochFlag flag = EpochFlag::Ok;
  double excess_phase = 0.0;     // m
  double excess_doppler = 0.0;   // m/s, populated at stage Smoothed
  double posterior_sigma = 0.0;  // m, populated at stage Smoothed
  double snr = 0.0;              // dB-Hz
  double elevation = 0.0;        // rad, straight-line vs ellipsoidal horizon
  double range = 0.0;            // m, light-time geometric range
  SatState rx_state;
  SatState tx_state;             // effective emission state
};

/// The occultation time series moving through the four-step chain.
struct ExcessPhaseSeries {
  SatId sat;
  Stage stage = Stage::Raw;
  std::string event_id;
  std::string reference_sat;  // set by the clock calibration
  std::vector<ExcessPhaseEpoch> epochs;

  size_t count_valid() const;
  double mean_elevation() const;  // over valid epochs
};

/// Throws Error unless the series is at the expected stage.
void require_stage(const ExcessPhaseSeries& s, Stage expected, const char* op);

}  // namespace gnssro::preprocess

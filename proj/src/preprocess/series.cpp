#include "gnssro/preprocess/series.hpp"

#include <string>

#include "gnssro/core/error.hpp"

namespace gnssro::preprocess {

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Raw: return "raw";
    case Stage::Calibrated: return "calibrated";
    case Stage::SlipCorrected: return "slip_corrected";
    case Stage::Smoothed: return "smoothed";
  }
  return "?";
}

size_t ExcessPhaseSeries::count_valid() const {
  size_t n = 0;
  for (const auto& e : epochs)
    if (e.valid) ++n;
  return n;
}

double ExcessPhaseSeries::mean_elevation() const {
  double sum = 0.0;
  size_t n = 0;
  for (const auto& e : epochs) {
    if (!e.valid) continue;
    sum += e.elevation;
    ++n;
  }
  return n ? sum / static_cast<double>(n) : 0.0;
}

void require_stage(const ExcessPhaseSeries& s, Stage expected, const char* op) {
  if (s.stage != expected) {
    throw Error(std::string(op) + ": series at stage '" + stage_name(s.stage) +
                "', expected '" + stage_name(expected) + "'");
  }
}

}  // namespace gnssro::preprocess

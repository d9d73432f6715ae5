#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gnssro/core/geodesy.hpp"
#include "gnssro/core/time.hpp"

namespace gnssro {

enum class Constellation { GPS, GAL, BDS, GLO };

char constellation_letter(Constellation c);
std::optional<Constellation> constellation_from_letter(char c);

/// Satellite identifier. GLONASS entries are parsed but carry an
/// excluded-by-default quality flag (comparatively poor data quality).
struct SatId {
  Constellation constellation = Constellation::GPS;
  int prn = 1;  // [1, 63]

  bool excluded_by_default() const { return constellation == Constellation::GLO; }
  std::string str() const;

  friend auto operator<=>(const SatId&, const SatId&) = default;
};

/// One receiver measurement epoch for one satellite.
struct ObsEpoch {
  Epoch t;
  SatId sat;
  double carrier_phase = 0.0;  // L1 cycles
  double doppler = 0.0;        // Hz
  double snr = 0.0;            // dB-Hz
  std::optional<double> pseudorange;  // m
  bool loss_of_lock = false;
};

/// Time-tagged platform position/velocity in ECEF.
struct PlatformState {
  Epoch t;
  EcefVec pos = EcefVec::Zero();  // m
  EcefVec vel = EcefVec::Zero();  // m/s
  std::optional<double> pos_sigma;  // m
};

/// Satellite position/velocity in ECEF at an epoch.
struct SatState {
  Epoch t;
  EcefVec pos = EcefVec::Zero();  // m
  EcefVec vel = EcefVec::Zero();  // m/s
};

/// Precise-ephemeris sample: position plus optional clock bias.
struct EphemerisSample {
  Epoch t;
  EcefVec pos = EcefVec::Zero();     // m
  std::optional<double> clock_bias;  // s
};

/// Per-satellite time-ordered ephemeris samples.
struct EphemerisTable {
  std::map<SatId, std::vector<EphemerisSample>> satellites;

  const std::vector<EphemerisSample>* find(const SatId& sat) const {
    auto it = satellites.find(sat);
    return it == satellites.end() ? nullptr : &it->second;
  }
};

/// One occultation arc: a single satellite's observations paired with the
/// platform states and the ephemeris slice covering the arc.
struct OccultationDataset {
  std::string event_id;
  SatId sat;
  std::vector<ObsEpoch> obs;            // time-ordered
  std::vector<PlatformState> platform;  // paired, same length as obs
  std::vector<EphemerisSample> ephem;   // slice covering the arc
};

}  // namespace gnssro

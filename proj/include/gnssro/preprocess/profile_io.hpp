#pragma once

#include <string>

#include "gnssro/preprocess/series.hpp"

namespace gnssro::preprocess {

enum class ProfileFormat { NetCdf, Json };

struct ExportMetadata {
  std::string processing_version = "gnssro-0.1";
  std::string config_hash;
};

/// Export a smoothed series as a self-describing profile file: dimension
/// (time); variables time, excess_phase, excess_doppler, snr, elevation,
/// flag, rx_pos(3), rx_vel(3), tx_pos(3), tx_vel(3), posterior_sigma;
/// global attributes sat, reference_sat, processing_version, config_hash.
/// NetCDF classic by default, JSON sidecar schema with identical names on
/// request. Readers accept both.
void export_profile(const ExcessPhaseSeries& s, const std::string& path,
                    ProfileFormat format = ProfileFormat::NetCdf,
                    const ExportMetadata& meta = {});

/// Read either format back (sniffed from the leading bytes). Throws Error
/// naming the first missing mandatory variable.
ExcessPhaseSeries read_profile(const std::string& path);

}  // namespace gnssro::preprocess

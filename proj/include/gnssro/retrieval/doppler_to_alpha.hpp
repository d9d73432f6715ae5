#pragma once

#include <optional>

#include "gnssro/preprocess/series.hpp"
#include "gnssro/retrieval/profiles.hpp"

namespace gnssro::retrieval {

/// Receiver-level refractive index source, in precedence order: in-situ
/// value if supplied, else background model, else unity (spaceborne mode)
/// when explicitly requested.
struct ReceiverRefractivity {
  std::optional<double> in_situ_n;                       // refractive index
  const atmosphere::AtmosphereModel* background = nullptr;
  bool unity = false;

  double resolve(double receiver_radius) const;
};

struct DopplerRetrievalConfig {
  ReceiverRefractivity n_r;
  double newton_tol = 1e-12;        // rad
  int max_iterations = 25;
  double max_failed_fraction = 0.3;
};

/// Doppler-to-Alpha: per epoch, solve for the ray direction angles at
/// transmitter and receiver such that (i) the projected Doppler matches the
/// measured range rate (geometric plus excess) and (ii) the Bouguer impact
/// parameters agree, n_t r_t sin(phi_t) = n_r r_r sin(phi_r) = a. Newton
/// iteration seeded from the straight-line ray; bending
/// alpha = phi_t + phi_r + theta - pi. Divergent epochs are flagged and
/// skipped; more than max_failed_fraction failures raises Error. The
/// returned profile is sorted ascending in a.
BendingAngleProfile doppler_to_bending(const preprocess::ExcessPhaseSeries& series,
                                       const DopplerRetrievalConfig& cfg);

}  // namespace gnssro::retrieval

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gnssro/atmosphere/model.hpp"
#include "gnssro/core/time.hpp"

namespace gnssro::retrieval {

enum class SampleQuality { Good, Suspect };

/// Bending angle vs impact parameter. Failed solves are excluded rather than
/// zero-filled; `a` ascends after sort_ascending().
struct BendingAngleProfile {
  std::vector<double> a;      // impact parameter, m
  std::vector<double> alpha;  // bending, rad
  std::vector<Epoch> t;       // per-sample epoch (empty for model-derived)
  std::vector<SampleQuality> quality;

  size_t size() const { return a.size(); }
  void sort_ascending();
};

/// Refractivity vs geometric radius, the retrieval end-product.
struct RefractivityProfile {
  std::vector<double> r;      // m, ascending
  std::vector<double> big_n;  // N-units
  double receiver_radius = 0.0;
  double n_receiver = 1.0;
  std::string topside_id;

  size_t size() const { return r.size(); }
};

/// Layered model over the profile span (for feeding retrieved refractivity
/// back through the forward integrator).
atmosphere::AtmosphereModel model_from_profile(const RefractivityProfile& p);

// CSV writers/readers for the profile file interfaces.
void write_bending_csv(std::ostream& out, const BendingAngleProfile& p);
BendingAngleProfile parse_bending_csv(std::istream& in);
void write_refractivity_profile_csv(std::ostream& out, const RefractivityProfile& p);
RefractivityProfile parse_refractivity_profile_csv(std::istream& in);

}  // namespace gnssro::retrieval

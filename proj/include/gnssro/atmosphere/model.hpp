#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace gnssro::atmosphere {

/// One meteorological level used to build a layered refractivity profile.
struct MetLevel {
  double p = 0.0;  // hPa
  double t = 0.0;  // K
  double e = 0.0;  // hPa, water-vapor partial pressure
  double z = 0.0;  // m, geometric height above the reference surface
};

/// Two-term Smith-Weintraub refractivity, N-units:
///   N = 77.6 p/T + 3.73e5 e/T^2
/// Coefficients configurable in one place (the paper never prints its
/// formula; these are the standard constants).
struct RefractivityCoefficients {
  double dry = 77.6;
  double wet = 3.73e5;
};
double refractivity_smith_weintraub(const MetLevel& level,
                                    const RefractivityCoefficients& coef = {});

/// Refractive index and its radial derivative at geocentric radius r.
struct Refractivity {
  double n = 1.0;      // refractive index
  double dn_dr = 0.0;  // 1/m
};

/// Spherically symmetric refractivity model: analytic exponential or a
/// layered profile interpolated exponentially (linear in ln N) between
/// levels. Above the top level the profile continues with a scale height
/// fitted to the top two levels so integrals to infinity converge.
class AtmosphereModel {
 public:
  /// N(r) = n0 * exp(-(r - r0)/h) in N-units.
  static AtmosphereModel exponential(double n0, double scale_height, double surface_radius);

  /// Levels at radii r (strictly ascending, >= 2 levels) with refractivity
  /// big_n in N-units (> 0 for log interpolation).
  static AtmosphereModel layered(std::vector<double> r, std::vector<double> big_n);

  /// Vacuum (N identically zero).
  static AtmosphereModel vacuum(double surface_radius);

  Refractivity eval(double r) const;

  /// N in N-units at radius r.
  double refractivity(double r) const;

  /// x(r) = n(r)*r, the refractional radius.
  double refractional_radius(double r) const { return eval(r).n * r; }

  /// Solve n(r)*r = x for r (Newton; x must be in the monotone regime).
  double radius_from_refractional(double x) const;

  /// Radius above which N < eps N-units (the effective top of the
  /// atmosphere for ray integrals).
  double top_radius(double eps_n_units = 1e-10) const;

  /// Reference surface radius the model was built against.
  double surface_radius() const { return surface_radius_; }

  /// Scan [r_lo, r_hi] for dx/dr = n + r*dn/dr <= 0 (super-refraction).
  /// Returns the first offending sub-interval, or nullopt when x(r) is
  /// strictly increasing — the precondition of the Abel machinery.
  std::optional<std::pair<double, double>> super_refraction_interval(double r_lo, double r_hi,
                                                                     int scan_points = 2048) const;

  bool is_vacuum() const;

 private:
  AtmosphereModel() = default;

  bool exponential_ = true;
  double n0_ = 0.0;          // N-units at surface_radius_
  double h_ = 7000.0;        // scale height, m
  double surface_radius_ = 6371000.0;

  std::vector<double> r_;      // layered: radii, ascending
  std::vector<double> ln_n_;   // layered: ln(N)
  double h_top_ = 7000.0;      // topside scale height (fitted)
  double h_bottom_ = 7000.0;   // below-bottom continuation
};

/// Build a layered model from met levels: r = r0 + z, N by Smith-Weintraub.
/// Requires >= 4 levels with strictly ascending heights.
AtmosphereModel layered_from_met(const std::vector<MetLevel>& levels, double surface_radius,
                                 const RefractivityCoefficients& coef = {});

/// CSV ingest for layered profiles: `z_m,p_hpa,t_k,e_hpa`, '#' comments.
std::vector<MetLevel> parse_met_csv(std::istream& in);

/// CSV ingest for refractivity profiles: `z_m,n_units`, '#' comments.
/// Returns (z_m, N) pairs.
std::vector<std::pair<double, double>> parse_refractivity_csv(std::istream& in);

void write_refractivity_csv(std::ostream& out,
                            const std::vector<std::pair<double, double>>& z_n);

}  // namespace gnssro::atmosphere

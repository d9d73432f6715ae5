#pragma once

namespace gnssro::constants {

inline constexpr double c_light = 299792458.0;        // m/s
inline constexpr double f_l1 = 1575.42e6;             // Hz
inline constexpr double lambda_l1 = c_light / f_l1;   // m, derived — never restate numerically

// WGS-84 defining parameters and derived quantities.
inline constexpr double wgs84_a = 6378137.0;                  // semi-major axis, m
inline constexpr double wgs84_f = 1.0 / 298.257223563;        // flattening
inline constexpr double wgs84_b = wgs84_a * (1.0 - wgs84_f);  // semi-minor axis, m
inline constexpr double wgs84_e2 = wgs84_f * (2.0 - wgs84_f); // first eccentricity squared
inline constexpr double wgs84_omega = 7.2921151467e-5;        // Earth rotation rate, rad/s

inline constexpr double r_earth_mean = 6371000.0;  // m
inline constexpr double earth_gm = 3.986004418e14; // m^3/s^2

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double deg = pi / 180.0;

}  // namespace gnssro::constants

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace gnssro {

using EcefVec = Eigen::Vector3d;

/// Geodetic coordinates on the WGS-84 ellipsoid.
struct GeodeticPos {
  double lat = 0.0;  // rad, [-pi/2, pi/2]
  double lon = 0.0;  // rad
  double h = 0.0;    // m above ellipsoid
};

/// Standard WGS-84 geodetic -> ECEF mapping.
EcefVec ecef_from_geodetic(const GeodeticPos& g);

/// ECEF -> geodetic by Bowring's iteration. Round-trips with
/// ecef_from_geodetic to < 1e-6 m over the flight envelope and GNSS orbit
/// radii. Throws Error for points within 1 km of the geocenter.
GeodeticPos geodetic_from_ecef(const EcefVec& v);

/// Elevation above the local ellipsoidal horizon at rx and azimuth clockwise
/// from north, for the straight line rx -> target. Throws Error when target
/// coincides with rx.
struct ElevationAzimuth {
  double elevation = 0.0;  // rad, [-pi/2, pi/2]
  double azimuth = 0.0;    // rad, [0, 2*pi)
};
ElevationAzimuth elevation_azimuth(const EcefVec& rx, const EcefVec& target);

/// Meridian radius of curvature M at latitude lat.
double meridian_radius(double lat);

/// Prime-vertical radius of curvature N at latitude lat.
double prime_vertical_radius(double lat);

/// Euler radius of curvature of the WGS-84 ellipsoid at latitude lat along
/// the given azimuth: 1/R = cos^2(az)/M + sin^2(az)/N. Used as the effective
/// spherical radius when mapping ellipsoidal geometry onto the spherically
/// symmetric retrieval.
double radius_of_curvature(double lat, double azimuth);

}  // namespace gnssro

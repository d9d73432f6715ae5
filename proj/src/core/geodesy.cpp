#include "gnssro/core/geodesy.hpp"

#include <cmath>

#include "gnssro/core/constants.hpp"
#include "gnssro/core/error.hpp"

namespace gnssro {

using namespace constants;

EcefVec ecef_from_geodetic(const GeodeticPos& g) {
  const double sphi = std::sin(g.lat);
  const double cphi = std::cos(g.lat);
  const double n = wgs84_a / std::sqrt(1.0 - wgs84_e2 * sphi * sphi);
  return {(n + g.h) * cphi * std::cos(g.lon),
          (n + g.h) * cphi * std::sin(g.lon),
          (n * (1.0 - wgs84_e2) + g.h) * sphi};
}

GeodeticPos geodetic_from_ecef(const EcefVec& v) {
  if (v.norm() < 1000.0) {
    throw Error("geodetic_from_ecef: point within 1 km of geocenter is degenerate");
  }
  const double p = std::hypot(v.x(), v.y());
  GeodeticPos g;
  g.lon = (p == 0.0) ? 0.0 : std::atan2(v.y(), v.x());

  if (p < 1e-9) {  // on the polar axis
    g.lat = std::copysign(pi / 2.0, v.z());
    g.h = std::abs(v.z()) - wgs84_b;
    return g;
  }

  // Bowring's iteration on the reduced latitude.
  const double ep2 = wgs84_e2 / (1.0 - wgs84_e2);
  double beta = std::atan2(v.z() * wgs84_a, p * wgs84_b);
  double lat = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double sb = std::sin(beta);
    const double cb = std::cos(beta);
    lat = std::atan2(v.z() + ep2 * wgs84_b * sb * sb * sb,
                     p - wgs84_e2 * wgs84_a * cb * cb * cb);
    const double beta_next = std::atan((wgs84_b / wgs84_a) * std::tan(lat));
    if (std::abs(beta_next - beta) < 1e-15) {
      beta = beta_next;
      break;
    }
    beta = beta_next;
  }
  const double sphi = std::sin(lat);
  const double n = wgs84_a / std::sqrt(1.0 - wgs84_e2 * sphi * sphi);
  g.lat = lat;
  // Height from whichever projection is better conditioned.
  if (std::abs(lat) < pi / 4.0) {
    g.h = p / std::cos(lat) - n;
  } else {
    g.h = v.z() / sphi - n * (1.0 - wgs84_e2);
  }
  return g;
}

ElevationAzimuth elevation_azimuth(const EcefVec& rx, const EcefVec& target) {
  const EcefVec d = target - rx;
  const double dist = d.norm();
  if (dist == 0.0) {
    throw Error("elevation_azimuth: target coincides with receiver");
  }
  const GeodeticPos g = geodetic_from_ecef(rx);
  const double sphi = std::sin(g.lat), cphi = std::cos(g.lat);
  const double slam = std::sin(g.lon), clam = std::cos(g.lon);
  const EcefVec up{cphi * clam, cphi * slam, sphi};
  const EcefVec east{-slam, clam, 0.0};
  const EcefVec north{-sphi * clam, -sphi * slam, cphi};

  const EcefVec u = d / dist;
  ElevationAzimuth ea;
  ea.elevation = std::asin(std::clamp(u.dot(up), -1.0, 1.0));
  ea.azimuth = std::atan2(u.dot(east), u.dot(north));
  if (ea.azimuth < 0.0) ea.azimuth += 2.0 * pi;
  return ea;
}

double meridian_radius(double lat) {
  const double s = std::sin(lat);
  const double w2 = 1.0 - wgs84_e2 * s * s;
  return wgs84_a * (1.0 - wgs84_e2) / (w2 * std::sqrt(w2));
}

double prime_vertical_radius(double lat) {
  const double s = std::sin(lat);
  return wgs84_a / std::sqrt(1.0 - wgs84_e2 * s * s);
}

double radius_of_curvature(double lat, double azimuth) {
  const double m = meridian_radius(lat);
  const double n = prime_vertical_radius(lat);
  const double ca = std::cos(azimuth);
  const double sa = std::sin(azimuth);
  return 1.0 / (ca * ca / m + sa * sa / n);
}

}  // namespace gnssro

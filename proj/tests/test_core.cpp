#include <doctest.h>

#include <cmath>
#include <random>

#include "gnssro/core/constants.hpp"
#include "gnssro/core/error.hpp"
#include "gnssro/core/geodesy.hpp"
#include "gnssro/core/time.hpp"

using namespace gnssro;
namespace k = gnssro::constants;

TEST_SUITE("core") {

TEST_CASE("total_seconds basics and monotonicity") {
  CHECK(total_seconds(Epoch{0, 0.0}) == 0.0);
  CHECK(total_seconds(Epoch{1, 0.0}) == 604800.0);
  CHECK(total_seconds(Epoch{2120, 345600.5}) == doctest::Approx(2120 * 604800.0 + 345600.5));

  // Strictly monotone over lexicographic (week, tow).
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> weeks(0, 3000);
  std::uniform_real_distribution<double> tows(0.0, 604800.0 - 1e-3);
  Epoch prev{0, 0.0};
  for (int i = 0; i < 200; ++i) {
    Epoch e{weeks(rng), tows(rng)};
    if (e < prev) std::swap(e, prev);
    if (e == prev) continue;
    CHECK(total_seconds(e) > total_seconds(prev));
    prev = e;
  }
}

TEST_CASE("civil round trip") {
  const CivilDate d{2020, 8, 22, 3, 30, 15.25};
  const Epoch e = epoch_from_civil(d);
  CHECK(e.tow >= 0.0);
  CHECK(e.tow < 604800.0);
  const CivilDate back = civil_from_epoch(e);
  CHECK(back.year == 2020);
  CHECK(back.month == 8);
  CHECK(back.day == 22);
  CHECK(back.hour == 3);
  CHECK(back.minute == 30);
  CHECK(back.second == doctest::Approx(15.25).epsilon(1e-9));

  // GPS origin.
  const Epoch origin = epoch_from_civil(CivilDate{1980, 1, 6, 0, 0, 0.0});
  CHECK(origin.week == 0);
  CHECK(origin.tow == 0.0);
}

TEST_CASE("advance normalizes the week") {
  const Epoch e = advance(Epoch{100, 604799.0}, 2.0);
  CHECK(e.week == 101);
  CHECK(e.tow == doctest::Approx(1.0));
  const Epoch b = advance(Epoch{100, 1.0}, -2.0);
  CHECK(b.week == 99);
  CHECK(b.tow == doctest::Approx(604799.0));
}

TEST_CASE("ecef_from_geodetic closed forms") {
  const EcefVec equator = ecef_from_geodetic({0.0, 0.0, 0.0});
  CHECK(equator.x() == doctest::Approx(k::wgs84_a));
  CHECK(equator.y() == doctest::Approx(0.0));
  CHECK(equator.z() == doctest::Approx(0.0));

  const EcefVec pole = ecef_from_geodetic({k::pi / 2.0, 0.0, 0.0});
  CHECK(pole.z() == doctest::Approx(k::wgs84_b).epsilon(1e-12));
  CHECK(std::hypot(pole.x(), pole.y()) < 1e-6);
}

TEST_CASE("geodetic round trips across the envelope") {
  const EcefVec back = ecef_from_geodetic(geodetic_from_ecef({k::wgs84_a, 0.0, 0.0}));
  CHECK((back - EcefVec{k::wgs84_a, 0.0, 0.0}).norm() < 1e-7);

  const GeodeticPos pole = geodetic_from_ecef({0.0, 0.0, 6356752.314});
  CHECK(pole.lat == doctest::Approx(k::pi / 2.0));
  CHECK(std::abs(pole.h) < 1e-2);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> lat(-k::pi / 2.0, k::pi / 2.0);
  std::uniform_real_distribution<double> lon(-k::pi, k::pi);
  std::uniform_real_distribution<double> h(-1e3, 1e6);
  for (int i = 0; i < 500; ++i) {
    const GeodeticPos g{lat(rng), lon(rng), h(rng)};
    const EcefVec v = ecef_from_geodetic(g);
    const GeodeticPos g2 = geodetic_from_ecef(v);
    const EcefVec v2 = ecef_from_geodetic(g2);
    CHECK((v2 - v).norm() < 1e-6);
  }

  // GNSS orbit radius.
  const GeodeticPos high = geodetic_from_ecef({2.0e7, 1.2e7, 0.9e7});
  const EcefVec vhigh = ecef_from_geodetic(high);
  CHECK((vhigh - EcefVec{2.0e7, 1.2e7, 0.9e7}).norm() < 1e-6);

  CHECK_THROWS_AS(geodetic_from_ecef({100.0, 0.0, 0.0}), Error);
}

TEST_CASE("ecef_from_geodetic cross-checked against an independent oracle") {
  // Direct expansion of the defining formulas, computed with independent
  // code at lat=0.6 rad, lon=-2.0 rad, h=18000 m.
  const GeodeticPos g{0.6, -2.0, 18000.0};
  const double s = std::sin(0.6), c = std::cos(0.6);
  const double nn = k::wgs84_a / std::sqrt(1.0 - k::wgs84_e2 * s * s);
  const EcefVec expect{(nn + 18000.0) * c * std::cos(-2.0), (nn + 18000.0) * c * std::sin(-2.0),
                       (nn * (1.0 - k::wgs84_e2) + 18000.0) * s};
  const EcefVec got = ecef_from_geodetic(g);
  CHECK((got - expect).norm() < 1e-9);
  CHECK((ecef_from_geodetic(geodetic_from_ecef(got)) - got).norm() < 1e-6);
}

TEST_CASE("elevation_azimuth conventions") {
  const GeodeticPos base{0.6, 1.1, 18000.0};
  const EcefVec rx = ecef_from_geodetic(base);

  SUBCASE("target straight above") {
    const EcefVec up = ecef_from_geodetic({base.lat, base.lon, base.h + 50000.0});
    const auto ea = elevation_azimuth(rx, up);
    CHECK(ea.elevation == doctest::Approx(k::pi / 2.0).epsilon(1e-9));
  }
  SUBCASE("target on the local horizon plane") {
    // Construct a point in the local east direction.
    const double sphi = std::sin(base.lat), cphi = std::cos(base.lat);
    const double slam = std::sin(base.lon), clam = std::cos(base.lon);
    const EcefVec east{-slam, clam, 0.0};
    (void)sphi;
    (void)cphi;
    const auto ea = elevation_azimuth(rx, rx + 1e5 * east);
    CHECK(std::abs(ea.elevation) < 1e-12);
    CHECK(ea.azimuth == doctest::Approx(k::pi / 2.0));
  }
  SUBCASE("satellite behind the limb is below the horizon") {
    // 18 km balloon, satellite at GNSS radius on the far side of the limb.
    const EcefVec rx0{6371000.0 + 18000.0, 0.0, 0.0};
    const double theta = 1.42;  // well past the geometric horizon
    const EcefVec sat{26560e3 * std::cos(theta), 26560e3 * std::sin(theta), 0.0};
    const auto ea = elevation_azimuth(rx0, sat);
    CHECK(ea.elevation < 0.0);
  }
  SUBCASE("coincident target throws") {
    CHECK_THROWS_AS(elevation_azimuth(rx, rx), Error);
  }
}

TEST_CASE("elevation is rotation-consistent about the z-axis") {
  const EcefVec rx = ecef_from_geodetic({0.35, 0.2, 18000.0});
  const EcefVec target{2.0e7, 1.0e7, 5.0e6};
  const double e0 = elevation_azimuth(rx, target).elevation;
  for (double ang : {0.3, 1.7, 3.0}) {
    const double c = std::cos(ang), s = std::sin(ang);
    const EcefVec rx_r{c * rx.x() - s * rx.y(), s * rx.x() + c * rx.y(), rx.z()};
    const EcefVec tg_r{c * target.x() - s * target.y(), s * target.x() + c * target.y(),
                       target.z()};
    CHECK(elevation_azimuth(rx_r, tg_r).elevation == doctest::Approx(e0).epsilon(1e-12));
  }
}

TEST_CASE("radius_of_curvature closed forms") {
  // Euler's theorem: 1/R = cos^2(A)/M + sin^2(A)/N.
  // Eastward at the equator the normal section is the equator itself.
  CHECK(radius_of_curvature(0.0, k::pi / 2.0) == doctest::Approx(k::wgs84_a).epsilon(1e-12));
  // Northward at the equator: the meridian radius a(1-e^2).
  CHECK(radius_of_curvature(0.0, 0.0) ==
        doctest::Approx(k::wgs84_a * (1.0 - k::wgs84_e2)).epsilon(1e-12));

  // Hand evaluation of the Euler formula at lat=0.61, azimuth=1.0.
  const double s = std::sin(0.61);
  const double w2 = 1.0 - k::wgs84_e2 * s * s;
  const double m = k::wgs84_a * (1.0 - k::wgs84_e2) / (w2 * std::sqrt(w2));
  const double n = k::wgs84_a / std::sqrt(w2);
  const double ca = std::cos(1.0), sa = std::sin(1.0);
  const double expect = 1.0 / (ca * ca / m + sa * sa / n);
  CHECK(radius_of_curvature(0.61, 1.0) == doctest::Approx(expect).epsilon(1e-14));

  // Between M and N everywhere.
  CHECK(radius_of_curvature(0.61, 0.3) > m);
  CHECK(radius_of_curvature(0.61, 0.3) < n);
}

}  // TEST_SUITE

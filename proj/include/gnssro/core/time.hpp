#pragma once

#include <compare>
#include <cstdint>

namespace gnssro {

inline constexpr double seconds_per_week = 604800.0;

/// GPS time tag: week number plus seconds into the week. All logged series
/// in the processing chain are GPS-time-tagged; no leap-second handling.
struct Epoch {
  int week = 0;
  double tow = 0.0;  // seconds of week, [0, 604800)

  friend auto operator<=>(const Epoch&, const Epoch&) = default;
};

/// Continuous GPS time in seconds since the GPS origin epoch.
/// Strictly increasing in lexicographic (week, tow).
inline double total_seconds(const Epoch& e) {
  return static_cast<double>(e.week) * seconds_per_week + e.tow;
}

/// e shifted by dt seconds, renormalized so tow stays in [0, 604800).
Epoch advance(const Epoch& e, double dt);

/// Signed difference a - b in seconds.
inline double diff_seconds(const Epoch& a, const Epoch& b) {
  return (static_cast<double>(a.week) - static_cast<double>(b.week)) * seconds_per_week +
         (a.tow - b.tow);
}

struct CivilDate {
  int year = 1980;
  int month = 1;
  int day = 6;
  int hour = 0;
  int minute = 0;
  double second = 0.0;
};

/// Gregorian calendar date/time (GPS time scale) to GPS week/tow.
Epoch epoch_from_civil(const CivilDate& d);

/// Inverse of epoch_from_civil.
CivilDate civil_from_epoch(const Epoch& e);

}  // namespace gnssro

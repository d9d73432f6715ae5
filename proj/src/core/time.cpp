#include "gnssro/core/time.hpp"

#include <cmath>

namespace gnssro {

namespace {

// Fliegel & Van Flandern day-number arithmetic.
long jdn_from_ymd(int y, int m, int d) {
  const long a = (14 - m) / 12;
  const long yy = y + 4800 - a;
  const long mm = m + 12 * a - 3;
  return d + (153 * mm + 2) / 5 + 365 * yy + yy / 4 - yy / 100 + yy / 400 - 32045;
}

void ymd_from_jdn(long jdn, int& y, int& m, int& d) {
  const long a = jdn + 32044;
  const long b = (4 * a + 3) / 146097;
  const long c = a - 146097 * b / 4;
  const long dd = (4 * c + 3) / 1461;
  const long e = c - 1461 * dd / 4;
  const long mm = (5 * e + 2) / 153;
  d = static_cast<int>(e - (153 * mm + 2) / 5 + 1);
  m = static_cast<int>(mm + 3 - 12 * (mm / 10));
  y = static_cast<int>(100 * b + dd - 4800 + mm / 10);
}

const long kGpsOriginJdn = jdn_from_ymd(1980, 1, 6);

}  // namespace

Epoch advance(const Epoch& e, double dt) {
  double tow = e.tow + dt;
  int week = e.week;
  const double w = std::floor(tow / seconds_per_week);
  week += static_cast<int>(w);
  tow -= w * seconds_per_week;
  return Epoch{week, tow};
}

Epoch epoch_from_civil(const CivilDate& d) {
  const long days = jdn_from_ymd(d.year, d.month, d.day) - kGpsOriginJdn;
  const double sod = d.hour * 3600.0 + d.minute * 60.0 + d.second;
  const int week = static_cast<int>(days / 7 - (days % 7 < 0 ? 1 : 0));
  const long dow = days - static_cast<long>(week) * 7;
  return Epoch{week, static_cast<double>(dow) * 86400.0 + sod};
}

CivilDate civil_from_epoch(const Epoch& e) {
  const long day_in_week = static_cast<long>(std::floor(e.tow / 86400.0));
  double sod = e.tow - static_cast<double>(day_in_week) * 86400.0;
  const long jdn = kGpsOriginJdn + static_cast<long>(e.week) * 7 + day_in_week;
  CivilDate d;
  ymd_from_jdn(jdn, d.year, d.month, d.day);
  d.hour = static_cast<int>(sod / 3600.0);
  sod -= d.hour * 3600.0;
  d.minute = static_cast<int>(sod / 60.0);
  d.second = sod - d.minute * 60.0;
  return d;
}

}  // namespace gnssro

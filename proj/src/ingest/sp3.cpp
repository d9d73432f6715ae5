#include "gnssro/ingest/sp3.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "gnssro/core/error.hpp"
#include "gnssro/util/numeric.hpp"

namespace gnssro::ingest {

namespace {

constexpr double kClockSentinel = 999999.999999;

std::string field(const std::string& line, size_t pos, size_t len) {
  if (pos >= line.size()) return {};
  return line.substr(pos, std::min(len, line.size() - pos));
}

double to_double(const std::string& s, long line_no, const char* what) {
  const auto v = util::parse_double_strict(s);
  if (!v) {
    throw ParseError(std::string("bad SP3 numeric field for ") + what + ": '" + s + "'", line_no);
  }
  return *v;
}

}  // namespace

Sp3Result parse_sp3(std::istream& in) {
  Sp3Result out;
  std::string line;
  long line_no = 0;

  if (!std::getline(in, line)) throw ParseError("empty SP3 stream", 1);
  ++line_no;
  if (line.size() < 3 || line[0] != '#') throw ParseError("missing SP3 header line", line_no);
  const char version = line[1];
  if (version != 'c' && version != 'd') {
    throw ParseError(std::string("unsupported SP3 version letter '") + version + "'", line_no);
  }

  Epoch current{};
  bool have_epoch = false;
  double last_t = -1.0;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.rfind("EOF", 0) == 0) break;
    if (line.empty()) continue;
    if (line[0] == '*') {
      CivilDate cd;
      cd.year = static_cast<int>(to_double(field(line, 3, 4), line_no, "year"));
      cd.month = static_cast<int>(to_double(field(line, 8, 2), line_no, "month"));
      cd.day = static_cast<int>(to_double(field(line, 11, 2), line_no, "day"));
      cd.hour = static_cast<int>(to_double(field(line, 14, 2), line_no, "hour"));
      cd.minute = static_cast<int>(to_double(field(line, 17, 2), line_no, "minute"));
      cd.second = to_double(field(line, 20, 11), line_no, "second");
      current = epoch_from_civil(cd);
      const double t = total_seconds(current);
      if (have_epoch && t <= last_t) {
        throw ParseError("non-monotone SP3 epochs", line_no);
      }
      last_t = t;
      have_epoch = true;
      continue;
    }
    if (line[0] == 'P') {
      if (!have_epoch) throw ParseError("position record before first epoch line", line_no);
      auto cons = constellation_from_letter(line.size() > 1 ? line[1] : ' ');
      if (!cons) continue;  // constellations outside the processing set
      SatId sat;
      sat.constellation = *cons;
      sat.prn = static_cast<int>(to_double(field(line, 2, 2), line_no, "prn"));

      const double x_km = to_double(field(line, 4, 14), line_no, "x");
      const double y_km = to_double(field(line, 18, 14), line_no, "y");
      const double z_km = to_double(field(line, 32, 14), line_no, "z");
      if (std::abs(x_km) >= 999999.0 || std::abs(y_km) >= 999999.0 ||
          std::abs(z_km) >= 999999.0) {
        ++out.stats.dropped_positions;
        continue;
      }
      EphemerisSample s;
      s.t = current;
      s.pos = EcefVec{x_km * 1000.0, y_km * 1000.0, z_km * 1000.0};
      const std::string clk_s = field(line, 46, 14);
      if (clk_s.find_first_not_of(" \r") != std::string::npos) {
        const double clk_us = to_double(clk_s, line_no, "clock");
        if (clk_us < kClockSentinel - 0.5) s.clock_bias = clk_us * 1e-6;
      }
      out.table.satellites[sat].push_back(std::move(s));
      continue;
    }
    // Other record kinds (header metadata, V lines, comments) are ignored.
  }
  return out;
}

void write_sp3(std::ostream& out, const EphemerisTable& table) {
  // Union of epochs across satellites, ordered.
  std::vector<double> times;
  for (const auto& [sat, samples] : table.satellites) {
    for (const auto& s : samples) times.push_back(total_seconds(s.t));
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-9; }),
              times.end());
  if (times.empty()) throw Error("write_sp3: empty table");

  char buf[160];
  Epoch first{0, 0.0};
  first.week = static_cast<int>(times.front() / seconds_per_week);
  first.tow = times.front() - first.week * seconds_per_week;
  const CivilDate cd0 = civil_from_epoch(first);
  std::snprintf(buf, sizeof(buf), "#cP%4d %2d %2d %2d %2d %11.8f %7zu ORBIT IGS14 FIT GNSSRO",
                cd0.year, cd0.month, cd0.day, cd0.hour, cd0.minute, cd0.second, times.size());
  out << buf << '\n';

  for (double t : times) {
    Epoch e;
    e.week = static_cast<int>(t / seconds_per_week);
    e.tow = t - e.week * seconds_per_week;
    const CivilDate cd = civil_from_epoch(e);
    std::snprintf(buf, sizeof(buf), "*  %4d %2d %2d %2d %2d %11.8f", cd.year, cd.month, cd.day,
                  cd.hour, cd.minute, cd.second);
    out << buf << '\n';
    for (const auto& [sat, samples] : table.satellites) {
      for (const auto& s : samples) {
        if (std::abs(total_seconds(s.t) - t) >= 1e-9) continue;
        const double clk_us = s.clock_bias ? *s.clock_bias * 1e6 : kClockSentinel;
        std::snprintf(buf, sizeof(buf), "P%c%02d%14.6f%14.6f%14.6f%14.6f",
                      constellation_letter(sat.constellation), sat.prn, s.pos.x() / 1000.0,
                      s.pos.y() / 1000.0, s.pos.z() / 1000.0, clk_us);
        out << buf << '\n';
      }
    }
  }
  out << "EOF\n";
}

}  // namespace gnssro::ingest

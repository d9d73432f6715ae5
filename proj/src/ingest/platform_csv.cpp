#include "gnssro/ingest/platform_csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "gnssro/core/error.hpp"
#include "gnssro/util/numeric.hpp"

namespace gnssro::ingest {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  for (auto& f : out) {
    const auto b = f.find_first_not_of(" \t");
    const auto e = f.find_last_not_of(" \t");
    f = (b == std::string::npos) ? std::string() : f.substr(b, e - b + 1);
  }
  return out;
}

const char* kRequired[] = {"week", "tow", "x_m", "y_m", "z_m", "vx_mps", "vy_mps", "vz_mps"};

}  // namespace

PlatformCsvResult parse_platform_csv(std::istream& in) {
  PlatformCsvResult out;
  std::string line;
  long line_no = 0;

  // Header row (first non-comment line).
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    header = split_csv(line);
    break;
  }
  if (header.empty()) throw ParseError("platform CSV has no header row", line_no);
  for (const char* col : kRequired) {
    bool found = false;
    for (const auto& h : header)
      if (h == col) found = true;
    if (!found) throw ParseError(std::string("platform CSV header missing column '") + col + "'",
                                 line_no);
  }
  std::vector<int> col_of(9, -1);
  for (size_t i = 0; i < header.size(); ++i) {
    for (int k = 0; k < 8; ++k)
      if (header[i] == kRequired[k]) col_of[k] = static_cast<int>(i);
    if (header[i] == "sigma_m") col_of[8] = static_cast<int>(i);
  }

  double last_t = -std::numeric_limits<double>::infinity();
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_csv(line);
    if (f.size() < header.size()) throw ParseError("platform CSV row too short", line_no);

    double v[9];
    bool finite = true;
    for (int k = 0; k < 8; ++k) {
      const auto parsed = util::parse_double_strict(f[col_of[k]]);
      if (!parsed) {
        throw ParseError("bad platform CSV numeric field '" + f[col_of[k]] + "'", line_no);
      }
      v[k] = *parsed;
      if (!std::isfinite(v[k])) finite = false;
    }
    bool have_sigma = false;
    if (col_of[8] >= 0 && static_cast<size_t>(col_of[8]) < f.size() && !f[col_of[8]].empty()) {
      const auto sig = util::parse_double_strict(f[col_of[8]]);
      if (!sig) throw ParseError("bad platform CSV sigma field", line_no);
      v[8] = *sig;
      have_sigma = true;
      if (!std::isfinite(v[8])) finite = false;
    }
    if (!finite) {
      ++out.stats.rejected_rows;
      continue;
    }

    PlatformState s;
    s.t = Epoch{static_cast<int>(v[0]), v[1]};
    s.pos = EcefVec{v[2], v[3], v[4]};
    s.vel = EcefVec{v[5], v[6], v[7]};
    if (have_sigma) s.pos_sigma = v[8];

    const double t = total_seconds(s.t);
    if (t <= last_t) throw ParseError("platform CSV rows out of time order", line_no);
    last_t = t;
    out.states.push_back(std::move(s));
  }
  return out;
}

void write_platform_csv(std::ostream& out, const std::vector<PlatformState>& states) {
  out << "# balloon precise position/velocity log\n";
  out << "week,tow,x_m,y_m,z_m,vx_mps,vy_mps,vz_mps,sigma_m\n";
  char buf[360];
  for (const auto& s : states) {
    std::snprintf(buf, sizeof(buf),
                  "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.t.week, s.t.tow,
                  s.pos.x(), s.pos.y(), s.pos.z(), s.vel.x(), s.vel.y(), s.vel.z(),
                  s.pos_sigma.value_or(0.0));
    out << buf;
  }
}

}  // namespace gnssro::ingest

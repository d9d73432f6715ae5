#include "gnssro/ingest/rinex.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>

#include "gnssro/core/error.hpp"
#include "gnssro/util/numeric.hpp"

namespace gnssro::ingest {

namespace {

std::string field(const std::string& line, size_t pos, size_t len) {
  if (pos >= line.size()) return {};
  return line.substr(pos, std::min(len, line.size() - pos));
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

double to_double(const std::string& s, long line_no, const char* what) {
  const auto v = util::parse_double_strict(s);
  if (!v) {
    throw ParseError(std::string("bad numeric field for ") + what + ": '" + s + "'", line_no);
  }
  return *v;
}

int to_int(const std::string& s, long line_no, const char* what) {
  return static_cast<int>(to_double(s, line_no, what));
}

struct ObsCodeIndex {
  int phase = -1;   // index into the per-system obs-type list
  int doppler = -1;
  int snr = -1;
  int pseudorange = -1;
};

}  // namespace

RinexObsResult parse_rinex_obs(std::istream& in, const RinexSelection& sel) {
  RinexObsResult out;
  std::string line;
  long line_no = 0;

  // --- header ---
  bool have_version = false;
  bool header_done = false;
  std::map<char, std::vector<std::string>> obs_types;  // per system letter
  char pending_sys = 0;                                // continuation target

  while (std::getline(in, line)) {
    ++line_no;
    const std::string label = field(line, 60, 20);
    if (label.find("RINEX VERSION / TYPE") != std::string::npos) {
      const double version = to_double(field(line, 0, 9), line_no, "version");
      if (version < 3.0 || version >= 4.0) {
        throw ParseError("unsupported RINEX version " + std::to_string(version), line_no);
      }
      if (field(line, 20, 1) != "O") {
        throw ParseError("not an observation file", line_no);
      }
      have_version = true;
    } else if (label.find("SYS / # / OBS TYPES") != std::string::npos) {
      char sys = line.empty() ? ' ' : line[0];
      std::vector<std::string>* dst;
      int count;
      if (sys != ' ') {
        count = to_int(field(line, 3, 3), line_no, "obs type count");
        dst = &obs_types[sys];
        dst->reserve(count);
        pending_sys = sys;
      } else {
        if (!pending_sys) throw ParseError("obs-type continuation without a system line", line_no);
        dst = &obs_types[pending_sys];
        count = -1;
      }
      for (int k = 0; k < 13; ++k) {
        const std::string code = field(line, 7 + 4 * k, 3);
        if (!blank(code)) dst->push_back(code);
      }
      (void)count;
    } else if (label.find("END OF HEADER") != std::string::npos) {
      header_done = true;
      break;
    }
  }
  if (!have_version) throw ParseError("missing RINEX VERSION / TYPE header", line_no);
  if (!header_done) throw ParseError("missing END OF HEADER terminator", line_no);
  if (obs_types.empty()) throw ParseError("header declares no SYS / # / OBS TYPES", line_no);

  // Resolve per-system field indices once.
  std::map<char, ObsCodeIndex> indices;
  for (const auto& [sys, codes] : obs_types) {
    ObsCodeIndex idx;
    for (const auto& want : sel.phase_codes) {
      auto it = std::find(codes.begin(), codes.end(), want);
      if (it != codes.end()) {
        idx.phase = static_cast<int>(it - codes.begin());
        break;
      }
    }
    for (size_t i = 0; i < codes.size(); ++i) {
      if (idx.doppler < 0 && codes[i].rfind("D1", 0) == 0) idx.doppler = static_cast<int>(i);
      if (idx.snr < 0 && codes[i].rfind("S1", 0) == 0) idx.snr = static_cast<int>(i);
      if (idx.pseudorange < 0 && codes[i].rfind("C1", 0) == 0)
        idx.pseudorange = static_cast<int>(i);
    }
    indices[sys] = idx;
  }

  // --- observation records ---
  Epoch epoch;
  bool skip_epoch = true;  // until the first '>' line
  int sats_left = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    if (line[0] == '>') {
      CivilDate cd;
      cd.year = to_int(field(line, 2, 4), line_no, "year");
      cd.month = to_int(field(line, 7, 2), line_no, "month");
      cd.day = to_int(field(line, 10, 2), line_no, "day");
      cd.hour = to_int(field(line, 13, 2), line_no, "hour");
      cd.minute = to_int(field(line, 16, 2), line_no, "minute");
      cd.second = to_double(field(line, 19, 11), line_no, "second");
      const int flag = to_int(field(line, 31, 1), line_no, "epoch flag");
      sats_left = to_int(field(line, 32, 3), line_no, "satellite count");
      epoch = epoch_from_civil(cd);
      skip_epoch = flag > 1;
      if (skip_epoch) ++out.stats.skipped_epochs;
      continue;
    }
    if (sats_left <= 0) continue;
    --sats_left;
    if (skip_epoch) continue;

    const char sys = line[0];
    auto cit = constellation_from_letter(sys);
    if (!cit) {
      ++out.stats.unknown_sat_records;
      continue;
    }
    auto iit = indices.find(sys);
    if (iit == indices.end() || iit->second.phase < 0) {
      ++out.stats.blank_field_drops;
      continue;
    }
    const ObsCodeIndex& idx = iit->second;

    ObsEpoch o;
    o.t = epoch;
    o.sat.constellation = *cit;
    o.sat.prn = to_int(field(line, 1, 2), line_no, "prn");
    if (o.sat.prn < 1 || o.sat.prn > 63) {
      throw ParseError("PRN out of range", line_no);
    }

    auto value_at = [&](int slot) -> std::string { return field(line, 3 + 16 * slot, 14); };
    auto lli_at = [&](int slot) -> char {
      const std::string s = field(line, 3 + 16 * slot + 14, 1);
      return s.empty() ? ' ' : s[0];
    };

    const std::string phase_s = value_at(idx.phase);
    const std::string dopp_s = idx.doppler >= 0 ? value_at(idx.doppler) : std::string();
    const std::string snr_s = idx.snr >= 0 ? value_at(idx.snr) : std::string();
    if (blank(phase_s) || blank(dopp_s) || blank(snr_s)) {
      ++out.stats.blank_field_drops;
      continue;
    }
    o.carrier_phase = to_double(phase_s, line_no, "carrier phase");
    o.doppler = to_double(dopp_s, line_no, "Doppler");
    o.snr = to_double(snr_s, line_no, "SNR");
    if (!std::isfinite(o.carrier_phase) || !std::isfinite(o.doppler)) {
      ++out.stats.blank_field_drops;
      continue;
    }
    if (idx.pseudorange >= 0) {
      const std::string pr = value_at(idx.pseudorange);
      if (!blank(pr)) o.pseudorange = to_double(pr, line_no, "pseudorange");
    }
    const char lli = lli_at(idx.phase);
    o.loss_of_lock = (lli == '1' || lli == '3' || lli == '5' || lli == '7');
    out.obs.push_back(std::move(o));
  }
  return out;
}

void write_rinex_obs(std::ostream& out, const std::vector<ObsEpoch>& obs,
                     const std::string& marker_name) {
  char buf[128];

  std::vector<ObsEpoch> sorted = obs;
  std::stable_sort(sorted.begin(), sorted.end(), [](const ObsEpoch& a, const ObsEpoch& b) {
    if (total_seconds(a.t) != total_seconds(b.t)) return total_seconds(a.t) < total_seconds(b.t);
    return a.sat < b.sat;
  });

  std::vector<char> systems;
  for (const auto& o : sorted) {
    const char s = constellation_letter(o.sat.constellation);
    if (std::find(systems.begin(), systems.end(), s) == systems.end()) systems.push_back(s);
  }
  std::sort(systems.begin(), systems.end());

  std::snprintf(buf, sizeof(buf), "%9.2f%11s%-20s%-20s%-20s", 3.04, "", "OBSERVATION DATA",
                "M", "RINEX VERSION / TYPE");
  out << buf << '\n';
  std::snprintf(buf, sizeof(buf), "%-60s%-20s", marker_name.c_str(), "MARKER NAME");
  out << buf << '\n';
  for (char s : systems) {
    std::snprintf(buf, sizeof(buf), "%c  %3d %3s %3s %3s %3s%38s%-20s", s, 4, "C1C", "L1C", "D1C",
                  "S1C", "", "SYS / # / OBS TYPES");
    out << buf << '\n';
  }
  if (!sorted.empty()) {
    const CivilDate cd = civil_from_epoch(sorted.front().t);
    std::snprintf(buf, sizeof(buf), "%6d%6d%6d%6d%6d%13.7f     %3s%9s%-20s", cd.year, cd.month,
                  cd.day, cd.hour, cd.minute, cd.second, "GPS", "", "TIME OF FIRST OBS");
    out << buf << '\n';
  }
  std::snprintf(buf, sizeof(buf), "%60s%-20s", "", "END OF HEADER");
  out << buf << '\n';

  size_t i = 0;
  while (i < sorted.size()) {
    size_t j = i;
    while (j < sorted.size() && total_seconds(sorted[j].t) == total_seconds(sorted[i].t)) ++j;
    const CivilDate cd = civil_from_epoch(sorted[i].t);
    std::snprintf(buf, sizeof(buf), "> %04d %02d %02d %02d %02d%11.7f  %1d%3d", cd.year, cd.month,
                  cd.day, cd.hour, cd.minute, cd.second, 0, static_cast<int>(j - i));
    out << buf << '\n';
    for (size_t k = i; k < j; ++k) {
      const ObsEpoch& o = sorted[k];
      const double pr = o.pseudorange.value_or(0.0);
      // Each observation occupies F14.3 + LLI + SSI (16 columns).
      std::snprintf(buf, sizeof(buf), "%c%02d%14.3f  %14.3f%c %14.3f  %14.3f",
                    constellation_letter(o.sat.constellation), o.sat.prn, pr,
                    o.carrier_phase, o.loss_of_lock ? '1' : ' ', o.doppler, o.snr);
      out << buf << '\n';
    }
    i = j;
  }
}

}  // namespace gnssro::ingest

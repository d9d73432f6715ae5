#include "gnssro/retrieval/profiles.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "gnssro/core/error.hpp"
#include "gnssro/util/numeric.hpp"

namespace gnssro::retrieval {

void BendingAngleProfile::sort_ascending() {
  std::vector<size_t> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [this](size_t i, size_t j) { return a[i] < a[j]; });
  BendingAngleProfile sorted;
  sorted.a.reserve(a.size());
  sorted.alpha.reserve(a.size());
  for (size_t i : order) {
    sorted.a.push_back(a[i]);
    sorted.alpha.push_back(alpha[i]);
    if (!t.empty()) sorted.t.push_back(t[i]);
    if (!quality.empty()) sorted.quality.push_back(quality[i]);
  }
  *this = std::move(sorted);
}

atmosphere::AtmosphereModel model_from_profile(const RefractivityProfile& p) {
  return atmosphere::AtmosphereModel::layered(p.r, p.big_n);
}

void write_bending_csv(std::ostream& out, const BendingAngleProfile& p) {
  out << "a_m,alpha_rad,quality\n";
  char buf[96];
  for (size_t i = 0; i < p.size(); ++i) {
    const int q = (!p.quality.empty() && p.quality[i] == SampleQuality::Suspect) ? 1 : 0;
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%d\n", p.a[i], p.alpha[i], q);
    out << buf;
  }
}

namespace {
std::vector<std::vector<double>> read_rows(std::istream& in, const char* header, size_t ncols) {
  std::vector<std::vector<double>> rows;
  std::string line;
  long line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != header) throw ParseError(std::string("expected header '") + header + "'",
                                           line_no);
      saw_header = true;
      continue;
    }
    std::vector<double> row;
    size_t pos = 0;
    while (true) {
      const size_t comma = line.find(',', pos);
      const std::string f = line.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
      const auto parsed = gnssro::util::parse_double_strict(f);
      if (!parsed) throw ParseError("bad numeric field '" + f + "'", line_no);
      row.push_back(*parsed);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (row.size() != ncols) throw ParseError("wrong column count", line_no);
    rows.push_back(std::move(row));
  }
  if (!saw_header) throw ParseError("missing CSV header", line_no);
  return rows;
}
}  // namespace

BendingAngleProfile parse_bending_csv(std::istream& in) {
  const auto rows = read_rows(in, "a_m,alpha_rad,quality", 3);
  BendingAngleProfile p;
  for (const auto& row : rows) {
    p.a.push_back(row[0]);
    p.alpha.push_back(row[1]);
    p.quality.push_back(row[2] != 0.0 ? SampleQuality::Suspect : SampleQuality::Good);
  }
  return p;
}

void write_refractivity_profile_csv(std::ostream& out, const RefractivityProfile& p) {
  out << "# receiver_radius_m=" << p.receiver_radius << " n_receiver=" << p.n_receiver
      << " topside=" << p.topside_id << '\n';
  out << "r_m,n_units\n";
  char buf[80];
  for (size_t i = 0; i < p.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.r[i], p.big_n[i]);
    out << buf;
  }
}

RefractivityProfile parse_refractivity_profile_csv(std::istream& in) {
  const auto rows = read_rows(in, "r_m,n_units", 2);
  RefractivityProfile p;
  for (const auto& row : rows) {
    p.r.push_back(row[0]);
    p.big_n.push_back(row[1]);
  }
  return p;
}

}  // namespace gnssro::retrieval

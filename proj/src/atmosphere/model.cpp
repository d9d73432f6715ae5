#include "gnssro/atmosphere/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "gnssro/core/error.hpp"
#include "gnssro/util/numeric.hpp"

namespace gnssro::atmosphere {

namespace {
constexpr double kNScale = 1e-6;  // N-units -> (n - 1)

// Scale height from two (r, ln N) samples; fallback when not decaying.
double fit_scale_height(double r0, double ln0, double r1, double ln1, double fallback) {
  const double slope = (ln1 - ln0) / (r1 - r0);
  if (slope >= -1e-12) return fallback;
  return -1.0 / slope;
}
}  // namespace

double refractivity_smith_weintraub(const MetLevel& level, const RefractivityCoefficients& coef) {
  return coef.dry * level.p / level.t + coef.wet * level.e / (level.t * level.t);
}

AtmosphereModel AtmosphereModel::exponential(double n0, double scale_height,
                                             double surface_radius) {
  if (n0 < 0.0 || scale_height <= 0.0 || surface_radius <= 0.0) {
    throw Error("AtmosphereModel::exponential: invalid parameters");
  }
  AtmosphereModel m;
  m.exponential_ = true;
  m.n0_ = n0;
  m.h_ = scale_height;
  m.surface_radius_ = surface_radius;
  return m;
}

AtmosphereModel AtmosphereModel::vacuum(double surface_radius) {
  return exponential(0.0, 7000.0, surface_radius);
}

AtmosphereModel AtmosphereModel::layered(std::vector<double> r, std::vector<double> big_n) {
  if (r.size() != big_n.size() || r.size() < 4) {
    throw Error("AtmosphereModel::layered: need >= 4 matching levels");
  }
  AtmosphereModel m;
  m.exponential_ = false;
  m.surface_radius_ = r.front();
  m.r_ = std::move(r);
  m.ln_n_.resize(big_n.size());
  for (size_t i = 0; i < big_n.size(); ++i) {
    if (i + 1 < m.r_.size() && m.r_[i + 1] <= m.r_[i]) {
      throw Error("AtmosphereModel::layered: radii must be strictly ascending");
    }
    if (big_n[i] <= 0.0) {
      throw Error("AtmosphereModel::layered: refractivity must be positive");
    }
    m.ln_n_[i] = std::log(big_n[i]);
  }
  const size_t k = m.r_.size();
  m.h_top_ = fit_scale_height(m.r_[k - 2], m.ln_n_[k - 2], m.r_[k - 1], m.ln_n_[k - 1], 7000.0);
  m.h_bottom_ = fit_scale_height(m.r_[0], m.ln_n_[0], m.r_[1], m.ln_n_[1], 7000.0);
  return m;
}

bool AtmosphereModel::is_vacuum() const { return exponential_ && n0_ <= 0.0; }

double AtmosphereModel::refractivity(double r) const {
  if (r <= 0.0) throw Error("AtmosphereModel: radius must be positive");
  if (exponential_) {
    if (n0_ <= 0.0) return 0.0;
    return n0_ * std::exp(-(r - surface_radius_) / h_);
  }
  if (r <= r_.front()) {
    return std::exp(ln_n_.front()) * std::exp((r_.front() - r) / h_bottom_);
  }
  if (r >= r_.back()) {
    return std::exp(ln_n_.back()) * std::exp(-(r - r_.back()) / h_top_);
  }
  const auto it = std::upper_bound(r_.begin(), r_.end(), r);
  const size_t hi = it - r_.begin();
  const double w = (r - r_[hi - 1]) / (r_[hi] - r_[hi - 1]);
  return std::exp(ln_n_[hi - 1] + w * (ln_n_[hi] - ln_n_[hi - 1]));
}

Refractivity AtmosphereModel::eval(double r) const {
  if (r <= 0.0) throw Error("AtmosphereModel: radius must be positive");
  Refractivity out;
  if (exponential_) {
    if (n0_ <= 0.0) return out;  // vacuum
    const double big_n = n0_ * std::exp(-(r - surface_radius_) / h_);
    out.n = 1.0 + kNScale * big_n;
    out.dn_dr = -kNScale * big_n / h_;
    return out;
  }
  double big_n, dln_dr;
  if (r <= r_.front()) {
    big_n = std::exp(ln_n_.front()) * std::exp((r_.front() - r) / h_bottom_);
    dln_dr = -1.0 / h_bottom_;
  } else if (r >= r_.back()) {
    big_n = std::exp(ln_n_.back()) * std::exp(-(r - r_.back()) / h_top_);
    dln_dr = -1.0 / h_top_;
  } else {
    const auto it = std::upper_bound(r_.begin(), r_.end(), r);
    const size_t hi = it - r_.begin();
    dln_dr = (ln_n_[hi] - ln_n_[hi - 1]) / (r_[hi] - r_[hi - 1]);
    const double w = (r - r_[hi - 1]) / (r_[hi] - r_[hi - 1]);
    big_n = std::exp(ln_n_[hi - 1] + w * (ln_n_[hi] - ln_n_[hi - 1]));
  }
  out.n = 1.0 + kNScale * big_n;
  out.dn_dr = kNScale * big_n * dln_dr;
  return out;
}

double AtmosphereModel::radius_from_refractional(double x) const {
  double r = x;  // n is within 4e-4 of 1, so x is an excellent seed
  for (int it = 0; it < 50; ++it) {
    const Refractivity q = eval(r);
    const double f = q.n * r - x;
    const double fp = q.n + r * q.dn_dr;
    const double step = f / fp;
    r -= step;
    if (std::abs(step) < 1e-9) return r;
  }
  throw Error("radius_from_refractional: Newton did not converge");
}

double AtmosphereModel::top_radius(double eps_n_units) const {
  if (exponential_) {
    if (n0_ <= eps_n_units) return surface_radius_;
    return surface_radius_ + h_ * std::log(n0_ / eps_n_units);
  }
  const double n_top = std::exp(ln_n_.back());
  if (n_top <= eps_n_units) {
    // Walk down to the highest level still above eps.
    for (size_t i = r_.size(); i-- > 0;) {
      if (std::exp(ln_n_[i]) > eps_n_units) return r_[i + 1];
    }
    return r_.front();
  }
  return r_.back() + h_top_ * std::log(n_top / eps_n_units);
}

std::optional<std::pair<double, double>> AtmosphereModel::super_refraction_interval(
    double r_lo, double r_hi, int scan_points) const {
  if (is_vacuum() || r_hi <= r_lo) return std::nullopt;
  auto ok = [this](double r) {
    const Refractivity q = eval(r);
    return q.n + r * q.dn_dr > 0.0;
  };
  if (exponential_) {
    // dx/dr = 1 + 1e-6 N(r) (1 - r/h) decreases toward small r, so the
    // lower edge of the span is the critical point.
    if (!ok(r_lo)) return std::make_pair(r_lo, std::min(r_hi, r_lo + h_));
    return std::nullopt;
  }
  // Layered: exponential continuation below the bottom level, then each
  // layer checked at clipped endpoints and midpoint (N is monotone within a
  // layer, so the extremum of dx/dr sits at an edge).
  if (r_lo < r_.front() && !ok(r_lo)) {
    return std::make_pair(r_lo, std::min(r_hi, r_.front()));
  }
  auto check_span = [&](double a, double b) -> std::optional<std::pair<double, double>> {
    const double lo = std::max(a, r_lo), hi = std::min(b, r_hi);
    if (hi <= lo) return std::nullopt;
    // Sample strictly inside the span so a knot is attributed to the layer
    // whose slope actually applies there.
    const double eps = 1e-6 * (hi - lo);
    if (!ok(lo + eps) || !ok(0.5 * (lo + hi)) || !ok(hi - eps)) return std::make_pair(lo, hi);
    return std::nullopt;
  };
  for (size_t i = 0; i + 1 < r_.size(); ++i) {
    if (auto bad = check_span(r_[i], r_[i + 1])) return bad;
  }
  if (r_hi > r_.back()) {
    if (auto bad = check_span(r_.back(), r_hi)) return bad;
  }
  (void)scan_points;
  return std::nullopt;
}

AtmosphereModel layered_from_met(const std::vector<MetLevel>& levels, double surface_radius,
                                 const RefractivityCoefficients& coef) {
  if (levels.size() < 4) throw Error("layered_from_met: need >= 4 levels");
  std::vector<double> r(levels.size()), big_n(levels.size());
  for (size_t i = 0; i < levels.size(); ++i) {
    const MetLevel& l = levels[i];
    if (l.p <= 0.0 || l.t <= 0.0 || l.e < 0.0 || l.e >= l.p) {
      throw Error("layered_from_met: level violates p > 0, T > 0, 0 <= e < p");
    }
    if (i > 0 && levels[i].z <= levels[i - 1].z) {
      throw Error("layered_from_met: heights must be strictly ascending");
    }
    r[i] = surface_radius + l.z;
    big_n[i] = refractivity_smith_weintraub(l, coef);
  }
  return AtmosphereModel::layered(std::move(r), std::move(big_n));
}

namespace {
std::vector<std::vector<double>> parse_numeric_csv(std::istream& in,
                                                   const std::string& expected_header,
                                                   size_t ncols) {
  std::vector<std::vector<double>> rows;
  std::string line;
  long line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != expected_header) {
        throw ParseError("expected header '" + expected_header + "', got '" + line + "'",
                         line_no);
      }
      saw_header = true;
      continue;
    }
    std::vector<double> row;
    size_t pos = 0;
    while (pos <= line.size()) {
      const size_t comma = line.find(',', pos);
      const std::string f = line.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
      const auto parsed = util::parse_double_strict(f);
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

std::vector<MetLevel> parse_met_csv(std::istream& in) {
  const auto rows = parse_numeric_csv(in, "z_m,p_hpa,t_k,e_hpa", 4);
  std::vector<MetLevel> levels(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    levels[i] = MetLevel{rows[i][1], rows[i][2], rows[i][3], rows[i][0]};
  }
  return levels;
}

std::vector<std::pair<double, double>> parse_refractivity_csv(std::istream& in) {
  const auto rows = parse_numeric_csv(in, "z_m,n_units", 2);
  std::vector<std::pair<double, double>> out(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) out[i] = {rows[i][0], rows[i][1]};
  return out;
}

void write_refractivity_csv(std::ostream& out,
                            const std::vector<std::pair<double, double>>& z_n) {
  out << "z_m,n_units\n";
  char buf[80];
  for (const auto& [z, n] : z_n) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", z, n);
    out << buf;
  }
}

}  // namespace gnssro::atmosphere

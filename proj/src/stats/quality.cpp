#include "gnssro/stats/quality.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

#include "gnssro/core/error.hpp"

namespace gnssro::stats {

using nlohmann::json;

QualityLedger tally(const std::vector<EventOutcome>& events) {
  long observed = 0, parsed = 0, selected = 0;
  long drop_constellation = 0, drop_lock = 0, drop_other = 0;
  std::map<std::string, long> by_cons_observed, by_cons_parsed, by_cons_selected;

  for (const auto& ev : events) {
    ++observed;
    ++by_cons_observed[ev.constellation];
    if (ev.outcome == "selected") {
      ++parsed;
      ++selected;
      ++by_cons_parsed[ev.constellation];
      ++by_cons_selected[ev.constellation];
    } else if (ev.outcome == "parsed") {
      ++parsed;
      ++by_cons_parsed[ev.constellation];
    } else if (ev.outcome == "excluded-constellation") {
      ++drop_constellation;
    } else if (ev.outcome == "loss-of-lock") {
      ++drop_lock;
    } else if (ev.outcome == "observed") {
      ++drop_other;
    } else {
      throw Error("tally: unknown outcome tag '" + ev.outcome + "'");
    }
  }

  QualityLedger ledger;
  ledger.stages.push_back({"observed", observed, by_cons_observed});
  ledger.stages.push_back({"parsed", parsed, by_cons_parsed});
  ledger.stages.push_back({"selected", selected, by_cons_selected});
  ledger.edges.push_back({"observed", "parsed", parsed, "kept"});
  if (drop_constellation)
    ledger.edges.push_back({"observed", "dropped", drop_constellation, "excluded-constellation"});
  if (drop_lock) ledger.edges.push_back({"observed", "dropped", drop_lock, "loss-of-lock"});
  if (drop_other) ledger.edges.push_back({"observed", "dropped", drop_other, "unspecified"});
  ledger.edges.push_back({"parsed", "selected", selected, "kept"});
  if (parsed - selected > 0)
    ledger.edges.push_back({"parsed", "unselected", parsed - selected, "not-selected"});
  validate_ledger(ledger);
  return ledger;
}

void validate_ledger(const QualityLedger& ledger) {
  long prev = -1;
  for (const auto& st : ledger.stages) {
    if (st.count < 0) throw Error("ledger: negative stage count");
    if (prev >= 0 && st.count > prev) {
      throw Error("ledger: counts must be non-increasing along the main chain ('" + st.name +
                  "')");
    }
    prev = st.count;
    long out = 0;
    bool has_out = false;
    for (const auto& e : ledger.edges) {
      if (e.from == st.name) {
        out += e.count;
        has_out = true;
      }
    }
    if (has_out && out != st.count) {
      throw Error("ledger: edges out of stage '" + st.name + "' sum to " + std::to_string(out) +
                  ", stage count is " + std::to_string(st.count));
    }
  }
}

std::string ledger_to_json(const QualityLedger& ledger) {
  json j;
  j["stages"] = json::array();
  for (const auto& st : ledger.stages) {
    json s;
    s["name"] = st.name;
    s["count"] = st.count;
    s["by_constellation"] = st.by_constellation;
    j["stages"].push_back(std::move(s));
  }
  j["edges"] = json::array();
  for (const auto& e : ledger.edges) {
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"count", e.count},
                          {"reason", e.reason}});
  }
  return j.dump(1, ' ');
}

QualityLedger ledger_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("ledger: invalid JSON: ") + e.what());
  }
  QualityLedger ledger;
  for (const auto& s : j.at("stages")) {
    QualityLedger::StageCount st;
    st.name = s.at("name").get<std::string>();
    st.count = s.at("count").get<long>();
    if (s.contains("by_constellation")) {
      st.by_constellation = s["by_constellation"].get<std::map<std::string, long>>();
    }
    ledger.stages.push_back(std::move(st));
  }
  for (const auto& e : j.at("edges")) {
    ledger.edges.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                            e.at("count").get<long>(), e.value("reason", std::string{})});
  }
  return ledger;
}

DensityReport sounding_density(long count, double area_km2, double duration_days) {
  if (count < 0 || area_km2 <= 0.0 || duration_days <= 0.0) {
    throw Error("sounding_density: count must be >= 0 and area/duration positive");
  }
  DensityReport r;
  r.count = count;
  r.area_km2 = area_km2;
  r.duration_days = duration_days;
  r.density = static_cast<double>(count) / duration_days / (area_km2 / 1e6);
  r.density_mi2 = r.density * 2.589988;
  return r;
}

std::string density_to_json(const DensityReport& r) {
  json j;
  j["count"] = r.count;
  j["area_km2"] = r.area_km2;
  j["duration_days"] = r.duration_days;
  j["density_per_1e6km2_per_day"] = r.density;
  j["density_per_1e6mi2_per_day"] = r.density_mi2;
  j["formula"] = "count / duration_days / (area_km2 / 1e6); mi2 figure x 2.589988";
  return j.dump(1, ' ');
}

std::string density_to_text(const DensityReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "sounding density: %ld soundings / %.6g days / (%.6g km^2 / 1e6)\n"
                "  = %.6g per 1e6 km^2 per day\n"
                "  = %.6g per 1e6 mi^2 per day (x 2.589988 km^2/mi^2)\n",
                r.count, r.duration_days, r.area_km2, r.density, r.density_mi2);
  return buf;
}

GridCoverage grid_coverage(const std::vector<std::pair<double, double>>& tangent_lat_lon_deg,
                           double cell_deg) {
  if (cell_deg <= 0.0) throw Error("grid_coverage: cell size must be positive");
  GridCoverage g;
  g.cell_deg = cell_deg;
  g.n_lat = static_cast<long>(std::ceil(180.0 / cell_deg));
  g.n_lon = static_cast<long>(std::ceil(360.0 / cell_deg));

  auto index_of = [cell_deg](double v) {
    const double q = v / cell_deg;
    long idx = static_cast<long>(std::floor(q));
    if (q == std::floor(q) && idx > 0) --idx;  // boundary goes to the lower-index cell
    return idx;
  };

  for (auto [lat, lon] : tangent_lat_lon_deg) {
    lon = std::fmod(lon + 180.0, 360.0);
    if (lon < 0.0) lon += 360.0;
    const long i_lat = std::clamp(index_of(lat + 90.0), 0L, g.n_lat - 1);
    const long i_lon = std::clamp(index_of(lon), 0L, g.n_lon - 1);
    ++g.cells[{i_lat, i_lon}];
    ++g.total;
  }
  return g;
}

}  // namespace gnssro::stats

#pragma once

#include <map>
#include <string>
#include <vector>

namespace gnssro::stats {

/// Quality-accounting ledger for the event down-selection chain (the data
/// behind a Sankey rendering, which is delegated to external tools).
struct QualityLedger {
  struct StageCount {
    std::string name;
    long count = 0;
    std::map<std::string, long> by_constellation;
  };
  struct Edge {
    std::string from;
    std::string to;
    long count = 0;
    std::string reason;
  };
  std::vector<StageCount> stages;
  std::vector<Edge> edges;
};

/// Terminal outcome of one observed event.
struct EventOutcome {
  std::string constellation;  // "GPS", "GAL", "BDS", "GLO"
  std::string outcome;  // observed | excluded-constellation | loss-of-lock | parsed | selected
};

/// Build the ledger from per-event outcomes. Stage counts are conserved:
/// edges out of a stage sum to the stage count. Unknown outcome tags raise
/// Error.
QualityLedger tally(const std::vector<EventOutcome>& events);

/// Check flow conservation (edges out of each stage sum to its count,
/// counts non-increasing along the main chain). Throws Error on violation.
void validate_ledger(const QualityLedger& ledger);

std::string ledger_to_json(const QualityLedger& ledger);
QualityLedger ledger_from_json(const std::string& text);

struct DensityReport {
  long count = 0;
  double area_km2 = 0.0;
  double duration_days = 0.0;
  double density = 0.0;      // soundings per 1e6 km^2 per day
  double density_mi2 = 0.0;  // soundings per 1e6 mi^2 per day
};

/// density = count / duration / (area/1e6); the mi^2 figure scales by
/// 2.589988 km^2 per mi^2. Inputs must be positive.
DensityReport sounding_density(long count, double area_km2, double duration_days);

std::string density_to_json(const DensityReport& r);
std::string density_to_text(const DensityReport& r);

/// Lat/lon grid-cell counts. Events exactly on a cell boundary go to the
/// lower-index cell. Total is preserved.
struct GridCoverage {
  double cell_deg = 0.0;
  long n_lat = 0;
  long n_lon = 0;
  std::map<std::pair<long, long>, long> cells;  // (lat_idx, lon_idx) -> count
  long total = 0;
};

GridCoverage grid_coverage(const std::vector<std::pair<double, double>>& tangent_lat_lon_deg,
                           double cell_deg);

}  // namespace gnssro::stats

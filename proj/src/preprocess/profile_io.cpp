#include "gnssro/preprocess/profile_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>

#include "gnssro/core/error.hpp"
#include "gnssro/util/netcdf_classic.hpp"

namespace gnssro::preprocess {

namespace {

using nlohmann::json;
using util::NcFile;

const char* const kVectorVars[] = {"rx_pos", "rx_vel", "tx_pos", "tx_vel"};
const char* const kScalarVars[] = {"time",      "excess_phase", "excess_doppler",
                                   "snr",       "elevation",    "posterior_sigma"};

int flag_code(EpochFlag f) {
  switch (f) {
    case EpochFlag::Ok: return 0;
    case EpochFlag::Gap: return 1;
    case EpochFlag::SlipCorrected: return 2;
    case EpochFlag::Interpolated: return 3;
  }
  return 0;
}

EpochFlag flag_from_code(int c) {
  switch (c) {
    case 1: return EpochFlag::Gap;
    case 2: return EpochFlag::SlipCorrected;
    case 3: return EpochFlag::Interpolated;
    default: return EpochFlag::Ok;
  }
}

Epoch epoch_from_total(double t) {
  const int week = static_cast<int>(std::floor(t / seconds_per_week));
  return Epoch{week, t - static_cast<double>(week) * seconds_per_week};
}

SatId sat_from_str(const std::string& s) {
  if (s.size() < 2) throw Error("profile: bad satellite id '" + s + "'");
  const auto c = constellation_from_letter(s[0]);
  if (!c) throw Error("profile: bad satellite id '" + s + "'");
  return SatId{*c, std::stoi(s.substr(1))};
}

struct Columns {
  std::vector<double> scalar[6];
  std::vector<double> vec[4];  // flattened (n,3)
  std::vector<std::int32_t> flags;
};

Columns collect(const ExcessPhaseSeries& s) {
  Columns c;
  const size_t n = s.epochs.size();
  for (auto& v : c.scalar) v.reserve(n);
  for (auto& v : c.vec) v.reserve(3 * n);
  c.flags.reserve(n);
  for (const auto& e : s.epochs) {
    c.scalar[0].push_back(total_seconds(e.t));
    c.scalar[1].push_back(e.excess_phase);
    c.scalar[2].push_back(e.excess_doppler);
    c.scalar[3].push_back(e.snr);
    c.scalar[4].push_back(e.elevation);
    c.scalar[5].push_back(e.posterior_sigma);
    c.flags.push_back(e.valid ? flag_code(e.flag) : 1);
    const EcefVec* vecs[4] = {&e.rx_state.pos, &e.rx_state.vel, &e.tx_state.pos, &e.tx_state.vel};
    for (int k = 0; k < 4; ++k) {
      c.vec[k].push_back(vecs[k]->x());
      c.vec[k].push_back(vecs[k]->y());
      c.vec[k].push_back(vecs[k]->z());
    }
  }
  return c;
}

void write_netcdf(const ExcessPhaseSeries& s, const std::string& path,
                  const ExportMetadata& meta) {
  NcFile nc;
  const int dim_time = nc.add_dim("time", static_cast<std::int64_t>(s.epochs.size()));
  const int dim_xyz = nc.add_dim("xyz", 3);
  nc.add_attr("sat", s.sat.str());
  nc.add_attr("reference_sat", s.reference_sat);
  nc.add_attr("processing_version", meta.processing_version);
  nc.add_attr("config_hash", meta.config_hash);
  nc.add_attr("event_id", s.event_id);
  nc.add_attr("stage", std::string(stage_name(s.stage)));

  const Columns c = collect(s);
  for (int k = 0; k < 6; ++k) {
    auto& v = nc.add_var(kScalarVars[k], NcFile::VarType::Float64, {dim_time});
    v.float_data = c.scalar[k];
  }
  auto& fv = nc.add_var("flag", NcFile::VarType::Int32, {dim_time});
  fv.int_data = c.flags;
  for (int k = 0; k < 4; ++k) {
    auto& v = nc.add_var(kVectorVars[k], NcFile::VarType::Float64, {dim_time, dim_xyz});
    v.float_data = c.vec[k];
  }
  nc.write(path);
}

void write_json(const ExcessPhaseSeries& s, const std::string& path,
                const ExportMetadata& meta) {
  const Columns c = collect(s);
  json j;
  j["schema"] = "gnssro_profile";
  j["attributes"] = {{"sat", s.sat.str()},
                     {"reference_sat", s.reference_sat},
                     {"processing_version", meta.processing_version},
                     {"config_hash", meta.config_hash},
                     {"event_id", s.event_id},
                     {"stage", stage_name(s.stage)}};
  j["dimensions"] = {{"time", s.epochs.size()}, {"xyz", 3}};
  json vars;
  for (int k = 0; k < 6; ++k) vars[kScalarVars[k]] = c.scalar[k];
  vars["flag"] = c.flags;
  for (int k = 0; k < 4; ++k) {
    json rows = json::array();
    for (size_t i = 0; i < c.vec[k].size(); i += 3) {
      rows.push_back({c.vec[k][i], c.vec[k][i + 1], c.vec[k][i + 2]});
    }
    vars[kVectorVars[k]] = std::move(rows);
  }
  j["variables"] = std::move(vars);

  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("export_profile: cannot open '" + path + "' for writing");
  f << j.dump(1, ' ') << '\n';
  if (!f) throw Error("export_profile: write failed for '" + path + "'");
}

Stage stage_from_name(const std::string& name) {
  for (Stage s : {Stage::Raw, Stage::Calibrated, Stage::SlipCorrected, Stage::Smoothed}) {
    if (name == stage_name(s)) return s;
  }
  throw Error("profile: unknown stage '" + name + "'");
}

ExcessPhaseSeries assemble(const std::string& sat, const std::string& ref,
                           const std::string& event_id, const std::string& stage,
                           const Columns& c) {
  ExcessPhaseSeries s;
  s.sat = sat_from_str(sat);
  s.reference_sat = ref;
  s.event_id = event_id;
  s.stage = stage_from_name(stage);
  const size_t n = c.scalar[0].size();
  for (int k = 1; k < 6; ++k) {
    if (c.scalar[k].size() != n) throw Error("profile: inconsistent variable lengths");
  }
  s.epochs.resize(n);
  for (size_t i = 0; i < n; ++i) {
    auto& e = s.epochs[i];
    e.t = epoch_from_total(c.scalar[0][i]);
    e.excess_phase = c.scalar[1][i];
    e.excess_doppler = c.scalar[2][i];
    e.snr = c.scalar[3][i];
    e.elevation = c.scalar[4][i];
    e.posterior_sigma = c.scalar[5][i];
    e.flag = flag_from_code(c.flags[i]);
    e.valid = e.flag != EpochFlag::Gap;
    EcefVec* vecs[4] = {&e.rx_state.pos, &e.rx_state.vel, &e.tx_state.pos, &e.tx_state.vel};
    for (int k = 0; k < 4; ++k) {
      *vecs[k] = EcefVec{c.vec[k][3 * i], c.vec[k][3 * i + 1], c.vec[k][3 * i + 2]};
    }
    e.rx_state.t = e.t;
    e.tx_state.t = e.t;
  }
  return s;
}

std::string attr_text(const NcFile& nc, const char* name) {
  const auto* a = nc.find_attr(name);
  if (!a) throw Error(std::string("profile: missing attribute '") + name + "'");
  return std::get<std::string>(a->value);
}

ExcessPhaseSeries read_netcdf(const NcFile& nc) {
  Columns c;
  for (int k = 0; k < 6; ++k) {
    const auto* v = nc.find_var(kScalarVars[k]);
    if (!v) throw Error(std::string("profile: missing variable '") + kScalarVars[k] + "'");
    c.scalar[k] = v->float_data;
  }
  const auto* fv = nc.find_var("flag");
  if (!fv) throw Error("profile: missing variable 'flag'");
  c.flags = fv->int_data;
  for (int k = 0; k < 4; ++k) {
    const auto* v = nc.find_var(kVectorVars[k]);
    if (!v) throw Error(std::string("profile: missing variable '") + kVectorVars[k] + "'");
    c.vec[k] = v->float_data;
  }
  return assemble(attr_text(nc, "sat"), attr_text(nc, "reference_sat"),
                  attr_text(nc, "event_id"), attr_text(nc, "stage"), c);
}

ExcessPhaseSeries read_json(const json& j) {
  if (!j.contains("variables")) throw Error("profile: missing 'variables' object");
  const json& vars = j["variables"];
  Columns c;
  for (int k = 0; k < 6; ++k) {
    if (!vars.contains(kScalarVars[k])) {
      throw Error(std::string("profile: missing variable '") + kScalarVars[k] + "'");
    }
    c.scalar[k] = vars[kScalarVars[k]].get<std::vector<double>>();
  }
  if (!vars.contains("flag")) throw Error("profile: missing variable 'flag'");
  c.flags = vars["flag"].get<std::vector<std::int32_t>>();
  for (int k = 0; k < 4; ++k) {
    if (!vars.contains(kVectorVars[k])) {
      throw Error(std::string("profile: missing variable '") + kVectorVars[k] + "'");
    }
    for (const auto& row : vars[kVectorVars[k]]) {
      for (const auto& x : row) c.vec[k].push_back(x.get<double>());
    }
  }
  const json& attrs = j.at("attributes");
  return assemble(attrs.at("sat").get<std::string>(),
                  attrs.value("reference_sat", std::string{}),
                  attrs.value("event_id", std::string{}),
                  attrs.value("stage", std::string("smoothed")), c);
}

}  // namespace

void export_profile(const ExcessPhaseSeries& s, const std::string& path, ProfileFormat format,
                    const ExportMetadata& meta) {
  require_stage(s, Stage::Smoothed, "export_profile");
  if (format == ProfileFormat::NetCdf) {
    write_netcdf(s, path, meta);
  } else {
    write_json(s, path, meta);
  }
}

ExcessPhaseSeries read_profile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("read_profile: cannot open '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  if (util::looks_like_netcdf(bytes)) {
    return read_netcdf(NcFile::parse(bytes));
  }
  json j;
  try {
    j = json::parse(bytes.begin(), bytes.end());
  } catch (const json::exception& e) {
    throw Error(std::string("read_profile: not NetCDF and not valid JSON: ") + e.what());
  }
  return read_json(j);
}

}  // namespace gnssro::preprocess

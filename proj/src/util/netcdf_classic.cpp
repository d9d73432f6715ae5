#include "gnssro/util/netcdf_classic.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "gnssro/core/error.hpp"

namespace gnssro::util {

namespace {

constexpr std::uint32_t kTagDimension = 0x0A;
constexpr std::uint32_t kTagVariable = 0x0B;
constexpr std::uint32_t kTagAttribute = 0x0C;
constexpr std::uint32_t kTypeChar = 2;
constexpr std::uint32_t kTypeInt = 4;
constexpr std::uint32_t kTypeDouble = 6;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_f64(std::vector<std::uint8_t>& out, double d) {
  std::uint64_t bits;
  std::memcpy(&bits, &d, 8);
  for (int i = 7; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

void put_name(std::vector<std::uint8_t>& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.insert(out.end(), s.begin(), s.end());
  while (out.size() % 4 != 0) out.push_back(0);
}

size_t padded(size_t n) { return (n + 3) & ~size_t{3}; }

struct Reader {
  const std::vector<std::uint8_t>& b;
  size_t pos = 0;

  std::uint32_t u32() {
    if (pos + 4 > b.size()) throw Error("netcdf: truncated header");
    std::uint32_t v = (std::uint32_t(b[pos]) << 24) | (std::uint32_t(b[pos + 1]) << 16) |
                      (std::uint32_t(b[pos + 2]) << 8) | std::uint32_t(b[pos + 3]);
    pos += 4;
    return v;
  }
  double f64() {
    if (pos + 8 > b.size()) throw Error("netcdf: truncated data");
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits = (bits << 8) | b[pos + i];
    pos += 8;
    double d;
    std::memcpy(&d, &bits, 8);
    return d;
  }
  std::string name() {
    const std::uint32_t len = u32();
    if (pos + len > b.size()) throw Error("netcdf: truncated name");
    std::string s(b.begin() + pos, b.begin() + pos + len);
    pos += padded(len);
    return s;
  }
};

}  // namespace

int NcFile::add_dim(const std::string& name, std::int64_t len) {
  dims.emplace_back(name, len);
  return static_cast<int>(dims.size()) - 1;
}

void NcFile::add_attr(const std::string& name, AttrValue value) {
  attributes.push_back({name, std::move(value)});
}

NcFile::Variable& NcFile::add_var(const std::string& name, VarType type,
                                  std::vector<int> dim_ids) {
  Variable v;
  v.name = name;
  v.type = type;
  v.dim_ids = std::move(dim_ids);
  variables.push_back(std::move(v));
  return variables.back();
}

const NcFile::Variable* NcFile::find_var(const std::string& name) const {
  for (const auto& v : variables)
    if (v.name == name) return &v;
  return nullptr;
}

const NcFile::Attribute* NcFile::find_attr(const std::string& name) const {
  for (const auto& a : attributes)
    if (a.name == name) return &a;
  return nullptr;
}

std::vector<std::uint8_t> NcFile::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(1024);
  out.insert(out.end(), {'C', 'D', 'F', 1});
  put_u32(out, 0);  // numrecs: no record dimension in this subset

  if (dims.empty()) {
    put_u32(out, 0);
    put_u32(out, 0);
  } else {
    put_u32(out, kTagDimension);
    put_u32(out, static_cast<std::uint32_t>(dims.size()));
    for (const auto& [name, len] : dims) {
      put_name(out, name);
      put_u32(out, static_cast<std::uint32_t>(len));
    }
  }

  auto emit_attrs = [&](const std::vector<Attribute>& attrs) {
    if (attrs.empty()) {
      put_u32(out, 0);
      put_u32(out, 0);
      return;
    }
    put_u32(out, kTagAttribute);
    put_u32(out, static_cast<std::uint32_t>(attrs.size()));
    for (const auto& a : attrs) {
      put_name(out, a.name);
      if (const auto* s = std::get_if<std::string>(&a.value)) {
        put_u32(out, kTypeChar);
        put_u32(out, static_cast<std::uint32_t>(s->size()));
        out.insert(out.end(), s->begin(), s->end());
        while (out.size() % 4 != 0) out.push_back(0);
      } else if (const auto* iv = std::get_if<std::vector<std::int32_t>>(&a.value)) {
        put_u32(out, kTypeInt);
        put_u32(out, static_cast<std::uint32_t>(iv->size()));
        for (auto x : *iv) put_u32(out, static_cast<std::uint32_t>(x));
      } else {
        const auto& dv = std::get<std::vector<double>>(a.value);
        put_u32(out, kTypeDouble);
        put_u32(out, static_cast<std::uint32_t>(dv.size()));
        for (double x : dv) put_f64(out, x);
      }
    }
  };
  emit_attrs(attributes);

  // Variable metadata needs data offsets; lay data out after the header.
  std::vector<size_t> var_sizes(variables.size());
  for (size_t i = 0; i < variables.size(); ++i) {
    size_t count = 1;
    for (int d : variables[i].dim_ids) count *= static_cast<size_t>(dims[d].second);
    var_sizes[i] = padded(count * (variables[i].type == VarType::Float64 ? 8 : 4));
  }

  // First pass with zero offsets to measure the header.
  auto emit_vars = [&](std::vector<std::uint8_t>& dst, const std::vector<size_t>& begins) {
    if (variables.empty()) {
      put_u32(dst, 0);
      put_u32(dst, 0);
      return;
    }
    put_u32(dst, kTagVariable);
    put_u32(dst, static_cast<std::uint32_t>(variables.size()));
    for (size_t i = 0; i < variables.size(); ++i) {
      const auto& v = variables[i];
      put_name(dst, v.name);
      put_u32(dst, static_cast<std::uint32_t>(v.dim_ids.size()));
      for (int d : v.dim_ids) put_u32(dst, static_cast<std::uint32_t>(d));
      put_u32(dst, 0);  // no per-variable attributes in this subset
      put_u32(dst, 0);
      put_u32(dst, v.type == VarType::Float64 ? kTypeDouble : kTypeInt);
      put_u32(dst, static_cast<std::uint32_t>(var_sizes[i]));
      put_u32(dst, static_cast<std::uint32_t>(begins[i]));
    }
  };

  std::vector<std::uint8_t> probe = out;
  emit_vars(probe, std::vector<size_t>(variables.size(), 0));
  const size_t header_size = probe.size();

  std::vector<size_t> begins(variables.size());
  size_t offset = header_size;
  for (size_t i = 0; i < variables.size(); ++i) {
    begins[i] = offset;
    offset += var_sizes[i];
  }
  emit_vars(out, begins);

  for (size_t i = 0; i < variables.size(); ++i) {
    const auto& v = variables[i];
    const size_t before = out.size();
    if (v.type == VarType::Float64) {
      for (double x : v.float_data) put_f64(out, x);
    } else {
      for (auto x : v.int_data) put_u32(out, static_cast<std::uint32_t>(x));
    }
    while (out.size() - before < var_sizes[i]) out.push_back(0);
  }
  return out;
}

void NcFile::write(const std::string& path) const {
  const auto bytes = serialize();
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("netcdf: cannot open '" + path + "' for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<long>(bytes.size()));
  if (!f) throw Error("netcdf: write failed for '" + path + "'");
}

bool looks_like_netcdf(const std::vector<std::uint8_t>& bytes) {
  return bytes.size() >= 4 && bytes[0] == 'C' && bytes[1] == 'D' && bytes[2] == 'F' &&
         (bytes[3] == 1 || bytes[3] == 2);
}

NcFile NcFile::parse(const std::vector<std::uint8_t>& bytes) {
  if (!looks_like_netcdf(bytes)) throw Error("netcdf: bad magic");
  Reader r{bytes, 4};
  NcFile nc;
  if (r.u32() != 0) throw Error("netcdf: record dimensions not supported by this reader");

  const std::uint32_t dim_tag = r.u32();
  const std::uint32_t dim_count = r.u32();
  if (dim_tag == kTagDimension) {
    for (std::uint32_t i = 0; i < dim_count; ++i) {
      const std::string name = r.name();
      const std::uint32_t len = r.u32();
      if (len == 0) throw Error("netcdf: record dimension not supported");
      nc.dims.emplace_back(name, len);
    }
  } else if (dim_tag != 0 || dim_count != 0) {
    throw Error("netcdf: malformed dimension list");
  }

  auto read_attrs = [&](std::vector<Attribute>& dst) {
    const std::uint32_t tag = r.u32();
    const std::uint32_t count = r.u32();
    if (tag == 0 && count == 0) return;
    if (tag != kTagAttribute) throw Error("netcdf: malformed attribute list");
    for (std::uint32_t i = 0; i < count; ++i) {
      Attribute a;
      a.name = r.name();
      const std::uint32_t type = r.u32();
      const std::uint32_t n = r.u32();
      if (type == kTypeChar) {
        if (r.pos + n > bytes.size()) throw Error("netcdf: truncated attribute");
        a.value = std::string(bytes.begin() + r.pos, bytes.begin() + r.pos + n);
        r.pos += padded(n);
      } else if (type == kTypeInt) {
        std::vector<std::int32_t> v(n);
        for (auto& x : v) x = static_cast<std::int32_t>(r.u32());
        a.value = std::move(v);
      } else if (type == kTypeDouble) {
        std::vector<double> v(n);
        for (auto& x : v) x = r.f64();
        a.value = std::move(v);
      } else {
        throw Error("netcdf: unsupported attribute type " + std::to_string(type));
      }
      dst.push_back(std::move(a));
    }
  };
  read_attrs(nc.attributes);

  const std::uint32_t var_tag = r.u32();
  const std::uint32_t var_count = r.u32();
  struct VarMeta {
    size_t index;
    size_t begin;
    size_t count;
  };
  std::vector<VarMeta> metas;
  if (var_tag == kTagVariable) {
    for (std::uint32_t i = 0; i < var_count; ++i) {
      Variable v;
      v.name = r.name();
      const std::uint32_t ndims = r.u32();
      size_t count = 1;
      for (std::uint32_t d = 0; d < ndims; ++d) {
        const std::uint32_t id = r.u32();
        if (id >= nc.dims.size()) throw Error("netcdf: variable references unknown dimension");
        v.dim_ids.push_back(static_cast<int>(id));
        count *= static_cast<size_t>(nc.dims[id].second);
      }
      std::vector<Attribute> ignored;
      read_attrs(ignored);
      const std::uint32_t type = r.u32();
      r.u32();  // vsize (trust dims instead)
      const std::uint32_t begin = r.u32();
      if (type == kTypeDouble) {
        v.type = VarType::Float64;
      } else if (type == kTypeInt) {
        v.type = VarType::Int32;
      } else {
        throw Error("netcdf: unsupported variable type " + std::to_string(type));
      }
      nc.variables.push_back(std::move(v));
      metas.push_back({nc.variables.size() - 1, begin, count});
    }
  } else if (var_tag != 0 || var_count != 0) {
    throw Error("netcdf: malformed variable list");
  }

  for (const auto& m : metas) {
    Reader dr{bytes, m.begin};
    Variable& v = nc.variables[m.index];
    if (v.type == VarType::Float64) {
      v.float_data.resize(m.count);
      for (auto& x : v.float_data) x = dr.f64();
    } else {
      v.int_data.resize(m.count);
      for (auto& x : v.int_data) x = static_cast<std::int32_t>(dr.u32());
    }
  }
  return nc;
}

NcFile NcFile::read(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("netcdf: cannot open '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  return parse(bytes);
}

}  // namespace gnssro::util

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace gnssro::util {

/// Minimal NetCDF classic (CDF-1) container: fixed dimensions, global
/// attributes (char/int/double), and int/double variables. Big-endian
/// on-disk layout per the classic format; covers exactly the subset the
/// profile exports need, readable by any standard NetCDF tool.
struct NcFile {
  using AttrValue = std::variant<std::string, std::vector<std::int32_t>, std::vector<double>>;

  struct Attribute {
    std::string name;
    AttrValue value;
  };

  enum class VarType { Int32, Float64 };

  struct Variable {
    std::string name;
    VarType type = VarType::Float64;
    std::vector<int> dim_ids;
    std::vector<double> float_data;        // used when type == Float64
    std::vector<std::int32_t> int_data;    // used when type == Int32
  };

  std::vector<std::pair<std::string, std::int64_t>> dims;
  std::vector<Attribute> attributes;
  std::vector<Variable> variables;

  int add_dim(const std::string& name, std::int64_t len);
  void add_attr(const std::string& name, AttrValue value);
  Variable& add_var(const std::string& name, VarType type, std::vector<int> dim_ids);

  const Variable* find_var(const std::string& name) const;
  const Attribute* find_attr(const std::string& name) const;

  /// Serialize to the classic on-disk layout.
  std::vector<std::uint8_t> serialize() const;
  void write(const std::string& path) const;

  /// Parse bytes previously produced by any classic-format writer (subset:
  /// no record dimension, int/double/char payloads). Throws Error on
  /// malformed input.
  static NcFile parse(const std::vector<std::uint8_t>& bytes);
  static NcFile read(const std::string& path);
};

bool looks_like_netcdf(const std::vector<std::uint8_t>& bytes);

}  // namespace gnssro::util

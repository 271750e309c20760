#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace spl {

/// Index of a value in each dimension.
using Point = std::vector<int>;

struct Dimension {
  std::string name;
  std::vector<nlohmann::json> values;
};

/// Ordered discrete hyper-parameter space for one agent kind.
struct SearchSpace {
  std::string agent;  // agent kind the configs are for, e.g. "BMRH"
  std::vector<Dimension> dims;

  std::uint64_t size() const;
  std::vector<int> cardinalities() const;
  /// Mixed-radix decoding, last dimension fastest.
  Point point_at(std::uint64_t index) const;
  /// Agent spec {"kind": agent, name: value, ...}.
  nlohmann::json config(const Point& point) const;
  void validate() const;
};

// {"agent": "BMRH", "dimensions": [{"name": "l", "values": [1, 2]}, ...]}
void to_json(nlohmann::json& j, const SearchSpace& s);
void from_json(const nlohmann::json& j, SearchSpace& s);

SearchSpace load_search_space(const std::string& path);

}  // namespace spl

#include "spl/tuning/search_space.hpp"

#include <fstream>

#include "spl/core/errors.hpp"

namespace spl {

std::uint64_t SearchSpace::size() const {
  std::uint64_t n = 1;
  for (const auto& d : dims) n *= d.values.size();
  return n;
}

std::vector<int> SearchSpace::cardinalities() const {
  std::vector<int> out;
  for (const auto& d : dims) out.push_back(static_cast<int>(d.values.size()));
  return out;
}

Point SearchSpace::point_at(std::uint64_t index) const {
  if (index >= size()) throw UsageError("point index out of range");
  Point p(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    const auto n = dims[i].values.size();
    p[i] = static_cast<int>(index % n);
    index /= n;
  }
  return p;
}

nlohmann::json SearchSpace::config(const Point& point) const {
  if (point.size() != dims.size()) throw UsageError("point has wrong dimensionality");
  nlohmann::json j = nlohmann::json::object();
  if (!agent.empty()) j["kind"] = agent;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (point[i] < 0 || point[i] >= static_cast<int>(dims[i].values.size()))
      throw UsageError("point value out of range for " + dims[i].name);
    j[dims[i].name] = dims[i].values[point[i]];
  }
  return j;
}

void SearchSpace::validate() const {
  if (dims.empty()) throw UsageError("search space has no dimensions");
  for (const auto& d : dims)
    if (d.values.empty()) throw UsageError("dimension '" + d.name + "' has no values");
}

void to_json(nlohmann::json& j, const SearchSpace& s) {
  j = nlohmann::json::object();
  j["agent"] = s.agent;
  auto& dims = j["dimensions"] = nlohmann::json::array();
  for (const auto& d : s.dims) dims.push_back({{"name", d.name}, {"values", d.values}});
}

void from_json(const nlohmann::json& j, SearchSpace& s) {
  try {
    s.agent = j.value("agent", std::string());
    s.dims.clear();
    for (const auto& d : j.at("dimensions"))
      s.dims.push_back({d.at("name").get<std::string>(),
                        d.at("values").get<std::vector<nlohmann::json>>()});
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(std::string("bad search space: ") + ex.what());
  }
  s.validate();
}

SearchSpace load_search_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open search space " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(path + ": " + ex.what());
  }
  return j.get<SearchSpace>();
}

}  // namespace spl

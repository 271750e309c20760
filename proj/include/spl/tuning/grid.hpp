#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "spl/tuning/search_space.hpp"

namespace spl {

struct GridEntry {
  Point point;
  double fitness = 0;
  int games = 0;
};

/// Win rate of a point over `games` games.
using BatchEvaluator = std::function<double(const Point&, int games, std::uint64_t seed)>;

/// Evaluates every point (or `sample` distinct random points when
/// 0 < sample < size) and returns them sorted by fitness, best first. Ties
/// keep enumeration order.
std::vector<GridEntry> grid_search(const SearchSpace& space, const BatchEvaluator& evaluate,
                                   int games_per_config, std::uint64_t seed, int jobs = 1,
                                   std::uint64_t sample = 0);

}  // namespace spl

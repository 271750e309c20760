#include "spl/tuning/grid.hpp"

#include <algorithm>
#include <unordered_set>

#include "spl/core/rng.hpp"
#include "spl/tuning/parallel.hpp"

namespace spl {

std::vector<GridEntry> grid_search(const SearchSpace& space, const BatchEvaluator& evaluate,
                                   int games_per_config, std::uint64_t seed, int jobs,
                                   std::uint64_t sample) {
  space.validate();
  const std::uint64_t size = space.size();
  std::vector<std::uint64_t> indices;
  if (sample > 0 && sample < size) {
    // Floyd's algorithm, then enumeration order.
    Rng rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    for (std::uint64_t j = size - sample; j < size; ++j) {
      std::uint64_t t = rng.below(j + 1);
      if (!chosen.insert(t).second) chosen.insert(j);
    }
    indices.assign(chosen.begin(), chosen.end());
    std::sort(indices.begin(), indices.end());
  } else {
    indices.resize(size);
    for (std::uint64_t i = 0; i < size; ++i) indices[i] = i;
  }

  std::vector<GridEntry> out(indices.size());
  parallel_for(static_cast<int>(indices.size()), jobs, [&](int i) {
    Point p = space.point_at(indices[i]);
    out[i].fitness = evaluate(p, games_per_config, mix_seed(seed, indices[i]));
    out[i].games = games_per_config;
    out[i].point = std::move(p);
  });
  std::stable_sort(out.begin(), out.end(),
                   [](const GridEntry& a, const GridEntry& b) { return a.fitness > b.fitness; });
  return out;
}

}  // namespace spl

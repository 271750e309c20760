#include "spl/engine/bench.hpp"

#include <chrono>

#include "spl/rules/generators.hpp"
#include "spl/rules/rules.hpp"

namespace spl {

Throughput bench_throughput(const GameParams& params, ContentPtr content, double seconds,
                            std::uint64_t seed, int max_ticks) {
  using Clock = std::chrono::steady_clock;
  Throughput out;
  Rng rng(seed);
  const auto start = Clock::now();
  const auto stop = start + std::chrono::duration<double>(seconds);
  while (Clock::now() < stop) {
    GameState state = new_game(params, content, rng());
    while (!state.over && state.tick < max_ticks) {
      auto a = try_random_action(state, state.current, rng());
      if (!a) break;
      apply(state, *a);
      ++out.states;
    }
    ++out.games;
  }
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

}  // namespace spl

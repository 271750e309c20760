#pragma once

#include <cstdint>

#include "spl/core/state.hpp"

namespace spl {

struct Throughput {
  double seconds = 0;
  std::int64_t states = 0;  // apply() calls
  std::int64_t games = 0;
  double states_per_second() const { return seconds > 0 ? states / seconds : 0; }
  double games_per_second() const { return seconds > 0 ? games / seconds : 0; }
};

/// Plays random-action games back to back for `seconds` of wall time.
Throughput bench_throughput(const GameParams& params, ContentPtr content, double seconds,
                            std::uint64_t seed = 1, int max_ticks = 300);

}  // namespace spl

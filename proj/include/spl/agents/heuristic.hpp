#pragma once

#include <functional>

#include "spl/core/state.hpp"

namespace spl {

/// State evaluation from one player's viewpoint; agents maximise deltas of it.
using Heuristic = std::function<double(const GameState&, int player)>;

/// The player's prestige points.
double prestige_heuristic(const GameState& state, int player);

}  // namespace spl

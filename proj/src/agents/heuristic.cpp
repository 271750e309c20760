#include "spl/agents/heuristic.hpp"

namespace spl {

double prestige_heuristic(const GameState& state, int player) {
  return static_cast<double>(state.players[player].prestige);
}

}  // namespace spl

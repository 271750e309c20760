#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "spl/core/state.hpp"
#include "spl/engine/forward_model.hpp"
#include "spl/rules/action.hpp"

namespace spl {

/// A game-playing policy. The engine hands it a determinized copy of the
/// state and a forward model with a fresh per-turn budget.
class Agent {
 public:
  virtual ~Agent() = default;

  /// Called before each game with a seed derived from the game seed.
  virtual void reset(std::uint64_t seed) = 0;

  /// Chooses an action for `player` (the player to move in `state`).
  virtual Action act(const GameState& state, int player, ForwardModel& fm) = 0;

  virtual std::string name() const = 0;
};

using AgentPtr = std::unique_ptr<Agent>;

}  // namespace spl

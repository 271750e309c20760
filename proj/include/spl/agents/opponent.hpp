#pragma once

#include <optional>

#include "spl/agents/config.hpp"
#include "spl/agents/heuristic.hpp"
#include "spl/core/state.hpp"
#include "spl/engine/budget.hpp"
#include "spl/rules/action.hpp"

namespace spl {

/// Action of `opponent` under the configured model, funded by a budget
/// forked from `planner` (ceil(omsb * capacity) units, refunded unspent).
/// om=0 returns nullopt without forking; an exhausted model budget or a
/// stuck opponent also yields nullopt (treated as a pass).
std::optional<Action> opponent_step(const GameState& state, int opponent,
                                    const OpponentModelConfig& model, Budget& planner,
                                    Rng& rng, const Heuristic& heuristic);

/// Plays every opponent turn until it is `me` to move again or the game
/// ends. Model decisions are charged to their forked budgets; applying the
/// chosen opponent action is not charged again.
void advance_opponents(GameState& state, int me, const OpponentModelConfig& model,
                       Budget& planner, Rng& rng, const Heuristic& heuristic);

}  // namespace spl

#include "spl/agents/opponent.hpp"

#include "spl/agents/basic.hpp"
#include "spl/core/errors.hpp"
#include "spl/engine/forward_model.hpp"
#include "spl/rules/rules.hpp"

namespace spl {

std::optional<Action> opponent_step(const GameState& state, int opponent,
                                    const OpponentModelConfig& model, Budget& planner,
                                    Rng& rng, const Heuristic& heuristic) {
  if (model.om == 0 || planner.exhausted()) return std::nullopt;
  Budget budget = planner.fork(model.omsb);
  ForwardModel fm(budget);
  try {
    if (model.om == 1) return fm.random_action(state, opponent, rng());
    return one_step_lookahead(state, opponent, fm, rng, heuristic);
  } catch (const BudgetExpired&) {
    return std::nullopt;
  }
}

void advance_opponents(GameState& state, int me, const OpponentModelConfig& model,
                       Budget& planner, Rng& rng, const Heuristic& heuristic) {
  while (!state.over && state.current != me) {
    auto a = opponent_step(state, state.current, model, planner, rng, heuristic);
    if (a)
      apply(state, *a);
    else
      skip_turn(state);
  }
}

}  // namespace spl

#include "spl/agents/basic.hpp"

#include "spl/core/errors.hpp"

namespace spl {

Action RandomAgent::act(const GameState& state, int player, ForwardModel& fm) {
  auto a = fm.random_action(state, player, rng_());
  if (!a) throw StalemateError();
  return *a;
}

std::optional<Action> one_step_lookahead(const GameState& state, int player, ForwardModel& fm,
                                         Rng& rng, const Heuristic& heuristic) {
  const double base = heuristic(state, player);
  std::optional<Action> best;
  double best_value = 0;
  while (fm.remaining() >= 2) {
    auto a = fm.random_action(state, player, rng());
    if (!a) return best;
    GameState next = state;
    fm.apply(next, *a);
    const double v = heuristic(next, player) - base;
    if (!best || v > best_value) {
      best = a;
      best_value = v;
    }
  }
  if (!best && fm.remaining() >= 1) best = fm.random_action(state, player, rng());
  return best;
}

Action OslaAgent::act(const GameState& state, int player, ForwardModel& fm) {
  auto a = one_step_lookahead(state, player, fm, rng_, heuristic_);
  if (a) return *a;
  if (fm.remaining() <= 0) throw BudgetExpired();
  throw StalemateError();
}

}  // namespace spl

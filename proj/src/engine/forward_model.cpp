#include "spl/engine/forward_model.hpp"

#include "spl/rules/generators.hpp"
#include "spl/rules/rules.hpp"

namespace spl {

void ForwardModel::apply(GameState& state, const Action& action) {
  budget_->consume();
  spl::apply(state, action);
}

std::optional<Action> ForwardModel::generate(ActionKind kind, const GameState& state, int player,
                                             std::uint64_t seed) {
  budget_->consume();
  return spl::generate(kind, state, player, seed);
}

std::optional<Action> ForwardModel::random_action(const GameState& state, int player,
                                                  std::uint64_t seed) {
  budget_->consume();
  return try_random_action(state, player, seed);
}

}  // namespace spl

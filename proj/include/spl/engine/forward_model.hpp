#pragma once

#include <cstdint>
#include <optional>

#include "spl/core/state.hpp"
#include "spl/engine/budget.hpp"
#include "spl/rules/action.hpp"

namespace spl {

/// Budget-metered access to the rules for simulated states. Every apply and
/// every generator call costs one unit; calls past the budget throw
/// BudgetExpired.
class ForwardModel {
 public:
  explicit ForwardModel(Budget& budget) noexcept : budget_(&budget) {}

  void apply(GameState& state, const Action& action);

  /// One generator of a given kind.
  std::optional<Action> generate(ActionKind kind, const GameState& state, int player,
                                 std::uint64_t seed);

  /// Random action via the six generators; nullopt on stalemate.
  std::optional<Action> random_action(const GameState& state, int player, std::uint64_t seed);

  Budget& budget() noexcept { return *budget_; }
  std::int64_t remaining() const noexcept { return budget_->remaining(); }

 private:
  Budget* budget_;
};

}  // namespace spl

#pragma once

#include <optional>

#include "spl/agents/heuristic.hpp"
#include "spl/engine/agent.hpp"

namespace spl {

/// Returns the first random action generated. Costs one unit.
class RandomAgent : public Agent {
 public:
  void reset(std::uint64_t seed) override { rng_ = Rng(seed); }
  Action act(const GameState& state, int player, ForwardModel& fm) override;
  std::string name() const override { return "RND"; }

 private:
  Rng rng_;
};

/// Samples random actions until the budget is spent and keeps the one with
/// the best heuristic delta (first found wins ties). Each candidate costs a
/// sample and an apply. Returns nullopt only on stalemate or an empty budget.
std::optional<Action> one_step_lookahead(const GameState& state, int player, ForwardModel& fm,
                                         Rng& rng, const Heuristic& heuristic);

class OslaAgent : public Agent {
 public:
  explicit OslaAgent(Heuristic heuristic = prestige_heuristic)
      : heuristic_(std::move(heuristic)) {}
  void reset(std::uint64_t seed) override { rng_ = Rng(seed); }
  Action act(const GameState& state, int player, ForwardModel& fm) override;
  std::string name() const override { return "OSLA"; }

 private:
  Heuristic heuristic_;
  Rng rng_;
};

}  // namespace spl

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spl/core/state.hpp"
#include "spl/engine/agent.hpp"

namespace spl {

enum class Outcome { Normal, Stalemate, Timeout };

const char* to_string(Outcome outcome);

struct GameResult {
  std::vector<int> winners;  // empty iff stalemate
  std::vector<int> prestige;
  std::vector<int> card_counts;
  int ticks = 0;
  Outcome outcome = Outcome::Normal;
  /// Turns where the agent's action was replaced by a random one.
  int substitutions = 0;

  bool is_winner(int player) const;
  /// 1/|winners| for a winner, 0 otherwise.
  double credit(int player) const;
};

inline constexpr int kDefaultMaxTicks = 300;
inline constexpr int kDefaultTickBudget = 1000;

struct RunOptions {
  int max_ticks = kDefaultMaxTicks;
  std::int64_t tick_budget = kDefaultTickBudget;
  /// Called after every applied action with the real state.
  std::function<void(const GameState&, const Action&)> on_action;
  /// Called when an agent's action is replaced; receives the reason.
  std::function<void(int player, const std::string&)> on_substitution;
};

/// Max prestige, then fewest purchased cards; remaining ties all win.
std::vector<int> standings_winners(const GameState& state);

/// Plays one game to completion. `agents[i]` plays seat i.
GameResult run_game(const GameParams& params, ContentPtr content,
                    std::span<Agent* const> agents, std::uint64_t seed,
                    const RunOptions& options = {});

}  // namespace spl

#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "spl/core/content.hpp"
#include "spl/core/params.hpp"
#include "spl/engine/game.hpp"

namespace spl {

struct EvalSettings {
  GameParams params;
  ContentPtr content;  // null means default_content()
  std::int64_t tick_budget = kDefaultTickBudget;
  int max_ticks = kDefaultMaxTicks;
  int jobs = 1;
};

/// Credit of `agent` in one game, seated at `seat` with the opponents
/// filling the other seats in order.
double game_credit(const nlohmann::json& agent, const std::vector<nlohmann::json>& opponents,
                   int seat, std::uint64_t seed, const EvalSettings& settings = {});

/// Mean credit of `agent` over `games` games against `opponents` (P-1 agent
/// specs). Game g uses seed mix_seed(seed, g) and seats the agent at g mod P,
/// with the opponents filling the other seats in order. A game credits
/// 1/|winners| to each winner and nothing on stalemate.
double evaluate_config(const nlohmann::json& agent, int games,
                       const std::vector<nlohmann::json>& opponents, std::uint64_t seed,
                       const EvalSettings& settings = {});

}  // namespace spl

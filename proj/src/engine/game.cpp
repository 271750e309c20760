#include "spl/engine/game.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include "spl/core/errors.hpp"
#include "spl/rules/generators.hpp"
#include "spl/rules/rules.hpp"

namespace spl {

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Normal: return "NORMAL";
    case Outcome::Stalemate: return "STALEMATE";
    case Outcome::Timeout: return "TIMEOUT";
  }
  return "?";
}

bool GameResult::is_winner(int player) const {
  return std::find(winners.begin(), winners.end(), player) != winners.end();
}

double GameResult::credit(int player) const {
  return is_winner(player) ? 1.0 / static_cast<double>(winners.size()) : 0.0;
}

std::vector<int> standings_winners(const GameState& state) {
  int best = -1;
  std::size_t fewest = 0;
  std::vector<int> winners;
  for (int p = 0; p < state.player_count(); ++p) {
    const auto& pl = state.players[p];
    std::size_t cards = pl.purchased.size();
    if (pl.prestige > best || (pl.prestige == best && cards < fewest)) {
      best = pl.prestige;
      fewest = cards;
      winners = {p};
    } else if (pl.prestige == best && cards == fewest) {
      winners.push_back(p);
    }
  }
  return winners;
}

GameResult run_game(const GameParams& params, ContentPtr content,
                    std::span<Agent* const> agents, std::uint64_t seed,
                    const RunOptions& options) {
  if (static_cast<int>(agents.size()) != params.players)
    throw UsageError("run_game needs exactly P agents");
  if (options.max_ticks <= 0) throw UsageError("max ticks must be positive");

  GameState state = new_game(params, std::move(content), seed);
  for (std::size_t i = 0; i < agents.size(); ++i) agents[i]->reset(mix_seed(seed, i + 1));

  GameResult result;
  while (true) {
    if (state.over) {
      result.outcome = Outcome::Normal;
      break;
    }
    if (state.tick >= options.max_ticks) {
      result.outcome = Outcome::Timeout;
      break;
    }
    const int p = state.current;
    if (!has_any_action(state, p)) {
      result.outcome = Outcome::Stalemate;
      break;
    }

    GameState view = copy_for_player(state, p, state.rng());
    Budget budget(options.tick_budget);
    ForwardModel fm(budget);
    std::optional<Action> chosen;
    std::string why;
    try {
      chosen = agents[p]->act(view, p, fm);
    } catch (const std::exception& e) {
      why = std::string("agent threw: ") + e.what();
    }
    if (chosen) {
      if (auto broken = check_action(state, *chosen)) {
        why = "illegal action (" + *broken + ")";
        chosen.reset();
      }
    }
    if (!chosen) {
      ++result.substitutions;
      if (options.on_substitution) options.on_substitution(p, why);
      chosen = random_action(state, p, state.rng());
    }
    apply(state, *chosen);
    if (options.on_action) options.on_action(state, *chosen);
  }

  result.ticks = state.tick;
  for (const auto& pl : state.players) {
    result.prestige.push_back(pl.prestige);
    result.card_counts.push_back(static_cast<int>(pl.purchased.size()));
  }
  if (result.outcome != Outcome::Stalemate) result.winners = standings_winners(state);
  return result;
}

}  // namespace spl

#include "spl/tuning/evaluate.hpp"

#include "spl/agents/factory.hpp"
#include "spl/core/errors.hpp"
#include "spl/core/rng.hpp"
#include "spl/tuning/parallel.hpp"

namespace spl {

double game_credit(const nlohmann::json& agent, const std::vector<nlohmann::json>& opponents,
                   int seat, std::uint64_t seed, const EvalSettings& settings) {
  const int players = settings.params.players;
  if (static_cast<int>(opponents.size()) != players - 1)
    throw UsageError("need " + std::to_string(players - 1) + " opponents");
  std::vector<AgentPtr> owned;
  for (int i = 0, o = 0; i < players; ++i)
    owned.push_back(make_agent(i == seat ? agent : opponents[o++]));
  std::vector<Agent*> seats;
  for (auto& a : owned) seats.push_back(a.get());
  RunOptions run;
  run.tick_budget = settings.tick_budget;
  run.max_ticks = settings.max_ticks;
  ContentPtr content = settings.content ? settings.content : default_content();
  return run_game(settings.params, content, seats, seed, run).credit(seat);
}

double evaluate_config(const nlohmann::json& agent, int games,
                       const std::vector<nlohmann::json>& opponents, std::uint64_t seed,
                       const EvalSettings& settings) {
  const int players = settings.params.players;
  if (static_cast<int>(opponents.size()) != players - 1)
    throw UsageError("need " + std::to_string(players - 1) + " opponents");
  if (games <= 0) return 0.0;
  // Fail on bad specs before spawning workers.
  make_agent(agent);
  for (const auto& o : opponents) make_agent(o);
  EvalSettings local = settings;
  if (!local.content) local.content = default_content();

  std::vector<double> credit(games);
  parallel_for(games, settings.jobs, [&](int g) {
    credit[g] = game_credit(agent, opponents, g % players,
                            mix_seed(seed, static_cast<std::uint64_t>(g)), local);
  });
  double total = 0;
  for (double c : credit) total += c;
  return total / games;
}

}  // namespace spl

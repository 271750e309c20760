#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spl/core/content.hpp"
#include "spl/core/errors.hpp"
#include "spl/engine/bench.hpp"
#include "spl/experiments/experiments.hpp"

using namespace spl;
using nlohmann::json;

namespace {

// "BMRH*" or '{"kind":"MCTS","d":3}'.
json parse_agent(const std::string& text) {
  if (!text.empty() && text.front() == '{') return json::parse(text);
  return text;
}

template <class Write>
void emit_csv(const std::string& path, Write write) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  write(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splendor-like engine, planning agents and tuning experiments"};
  app.require_subcommand(1);

  std::string config_path, out_path, space;
  int games = -1, max_ticks = -1, jobs = -1, repeats = -1, eval_games = -1;
  long long seed = -1, budget = -1, sample = -1;
  double seconds = -1;
  std::vector<std::string> agents, opponents;
  std::vector<int> budgets;

  app.add_option("--config", config_path, "Experiment config (JSON)")->check(CLI::ExistingFile);
  app.add_option("--games", games, "Games to play (per config for grid)");
  app.add_option("--seed", seed, "Master seed");
  app.add_option("--budget", budget, "Forward-model units per decision");
  app.add_option("--max-ticks", max_ticks, "Timeout in ticks");
  app.add_option("--jobs", jobs, "Worker threads");
  app.add_option("--out", out_path, "CSV output path");
  app.add_option("--agent", agents, "Lineup entry: kind (RND, OSLA, BMRH*, ...) or JSON spec");
  app.add_option("--opponent", opponents, "Opponent spec for tune/grid");

  auto* play = app.add_subcommand("play", "Fixed-seat games, e.g. the random baseline");
  auto* match = app.add_subcommand("match", "Lineup with seat rotation");
  auto* rr = app.add_subcommand("roundrobin", "Two-player games between every pair");
  auto* tune = app.add_subcommand("tune", "NTBEA repeats per budget plus true-fitness check");
  auto* grid = app.add_subcommand("grid", "Grid search over a search space");
  auto* bench = app.add_subcommand("bench", "Random-play throughput");
  for (auto* sub : {tune, grid}) sub->add_option("--space", space, "Search space JSON or bundled name");
  tune->add_option("--budgets", budgets, "NTBEA budgets (evaluations)")->delimiter(',');
  tune->add_option("--repeats", repeats, "NTBEA runs per budget");
  tune->add_option("--eval-games", eval_games, "Games to score each recommendation");
  grid->add_option("--sample", sample, "Evaluate only this many random configs");
  bench->add_option("--seconds", seconds, "Wall time to run");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    ExperimentConfig c;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      c = json::parse(in).get<ExperimentConfig>();
    }
    if (games >= 0) c.games = games;
    if (seed >= 0) c.seed = static_cast<std::uint64_t>(seed);
    if (budget >= 0) c.budget = budget;
    if (max_ticks >= 0) c.max_ticks = max_ticks;
    if (jobs >= 0) c.jobs = jobs;
    if (!out_path.empty()) c.out = out_path;
    if (!agents.empty()) {
      c.agents.clear();
      for (const auto& a : agents) c.agents.push_back(parse_agent(a));
    }
    if (!opponents.empty()) {
      c.opponents.clear();
      for (const auto& o : opponents) c.opponents.push_back(parse_agent(o));
    }
    if (!space.empty()) c.space = space;
    if (!budgets.empty()) c.budgets = budgets;
    if (repeats >= 0) c.repeats = repeats;
    if (eval_games >= 0) c.eval_games = eval_games;
    if (sample >= 0) c.sample = static_cast<std::uint64_t>(sample);
    if (seconds >= 0) c.seconds = seconds;
    c.params.validate();
    apply_defaults(c, command);

    if (play->parsed() || match->parsed()) {
      auto r = play->parsed() ? cmd_play(c) : cmd_match(c);
      print_lineup(std::cout, r);
      emit_csv(c.out, [&](std::ostream& o) { write_games_csv(o, r); });
    } else if (rr->parsed()) {
      auto rows = cmd_roundrobin(c);
      print_pairs(std::cout, rows);
      emit_csv(c.out, [&](std::ostream& o) { write_pairs_csv(o, rows); });
    } else if (tune->parsed()) {
      auto rows = cmd_tune(c);
      print_tune(std::cout, rows);
      emit_csv(c.out, [&](std::ostream& o) { write_tune_csv(o, rows); });
    } else if (grid->parsed()) {
      auto rows = cmd_grid(c);
      print_grid(std::cout, rows);
      emit_csv(c.out, [&](std::ostream& o) { write_grid_csv(o, rows); });
    } else if (bench->parsed()) {
      auto t = bench_throughput(c.params, default_content(), c.seconds, c.seed, c.max_ticks);
      std::cout << static_cast<long long>(t.states_per_second()) << " states/s, "
                << static_cast<long long>(t.games_per_second()) << " games/s (" << t.states
                << " states, " << t.games << " games in " << t.seconds << " s)\n";
      emit_csv(c.out, [&](std::ostream& o) {
        o << "seconds,states,games,states_per_second,games_per_second\n"
          << t.seconds << ',' << t.states << ',' << t.games << ',' << t.states_per_second() << ','
          << t.games_per_second() << '\n';
      });
    }
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const json::exception& ex) {
    std::cerr << "bad JSON: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}

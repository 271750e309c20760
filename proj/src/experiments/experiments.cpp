#include "spl/experiments/experiments.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "spl/agents/factory.hpp"
#include "spl/core/content.hpp"
#include "spl/core/errors.hpp"
#include "spl/core/rng.hpp"
#include "spl/tuning/evaluate.hpp"
#include "spl/tuning/parallel.hpp"

namespace spl {

using nlohmann::json;

namespace {

template <class T>
void read(const json& j, const char* key, T& out) {
  auto it = j.find(key);
  if (it == j.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception& ex) {
    throw UsageError(std::string("bad value for '") + key + "': " + ex.what());
  }
}

EvalSettings eval_settings(const ExperimentConfig& c, int jobs) {
  EvalSettings s;
  s.params = c.params;
  s.content = default_content();
  s.tick_budget = c.budget;
  s.max_ticks = c.max_ticks;
  s.jobs = jobs;
  return s;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string pct(const Rate& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << 100 * r.p << "% (+-" << 100 * r.se << "%)";
  return os.str();
}

LineupReport run_lineup(const ExperimentConfig& c, bool rotate) {
  const int players = c.params.players;
  if (static_cast<int>(c.agents.size()) != players)
    throw UsageError("lineup has " + std::to_string(c.agents.size()) + " agents for " +
                     std::to_string(players) + " players");
  if (c.games < 0) throw UsageError("games must be >= 0");
  for (const auto& a : c.agents) make_agent(a);
  ContentPtr content = default_content();

  LineupReport r;
  for (const auto& a : c.agents) r.labels.push_back(agent_label(a));
  r.games.resize(c.games);

  RunOptions run;
  run.tick_budget = c.budget;
  run.max_ticks = c.max_ticks;
  parallel_for(c.games, c.jobs, [&](int g) {
    GameRow& row = r.games[g];
    row.seed = mix_seed(c.seed, static_cast<std::uint64_t>(g));
    row.seating.resize(players);
    std::vector<AgentPtr> owned(players);
    for (int i = 0; i < players; ++i) {
      const int seat = rotate ? (i + g) % players : i;
      row.seating[seat] = i;
      owned[seat] = make_agent(c.agents[i]);
    }
    std::vector<Agent*> seats;
    for (auto& a : owned) seats.push_back(a.get());
    row.result = run_game(c.params, content, seats, row.seed, run);
  });

  std::vector<double> credit(players, 0.0);
  int stalemates = 0, timeouts = 0;
  std::vector<int> ticks;
  for (const auto& row : r.games) {
    for (int seat = 0; seat < players; ++seat) credit[row.seating[seat]] += row.result.credit(seat);
    stalemates += row.result.outcome == Outcome::Stalemate;
    timeouts += row.result.outcome == Outcome::Timeout;
    ticks.push_back(row.result.ticks);
  }
  for (int i = 0; i < players; ++i) {
    r.win.push_back(make_rate(credit[i], c.games));
    r.win_decided.push_back(make_rate(credit[i], c.games - stalemates));
  }
  r.stalemate = make_rate(stalemates, c.games);
  r.timeout = make_rate(timeouts, c.games);
  r.duration = moments(ticks);
  return r;
}

}  // namespace

void from_json(const json& j, ExperimentConfig& c) {
  static const std::set<std::string> known{
      "params", "agents", "opponents", "games",      "seed",   "budget", "max_ticks",
      "jobs",   "out",    "space",     "budgets",    "repeats", "eval_games", "sample",
      "ntbea",  "seconds"};
  if (!j.is_object()) throw UsageError("experiment config must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw UsageError("unknown config key '" + key + "'");
  if (j.contains("params")) c.params = j["params"].get<GameParams>();
  read(j, "agents", c.agents);
  read(j, "opponents", c.opponents);
  read(j, "games", c.games);
  read(j, "seed", c.seed);
  read(j, "budget", c.budget);
  read(j, "max_ticks", c.max_ticks);
  read(j, "jobs", c.jobs);
  read(j, "out", c.out);
  if (j.contains("space")) c.space = j["space"];
  read(j, "budgets", c.budgets);
  read(j, "repeats", c.repeats);
  read(j, "eval_games", c.eval_games);
  read(j, "sample", c.sample);
  read(j, "seconds", c.seconds);
  if (j.contains("ntbea")) {
    const json& n = j["ntbea"];
    for (const auto& [key, value] : n.items())
      if (key != "k" && key != "mutation" && key != "neighbours" && key != "epsilon")
        throw UsageError("unknown ntbea key '" + key + "'");
    read(n, "k", c.ntbea.k);
    read(n, "mutation", c.ntbea.mutation);
    read(n, "neighbours", c.ntbea.neighbours);
    read(n, "epsilon", c.ntbea.epsilon);
  }
}

void apply_defaults(ExperimentConfig& c, const std::string& command) {
  if (c.agents.empty()) {
    if (command == "play")
      c.agents.assign(c.params.players, "RND");
    else if (command == "match")
      c.agents = {"BMRH*", "SRH*", "MCTS*", "OSLA"};
    else if (command == "roundrobin")
      c.agents = {"MCTS*", "BMRH*", "SRH*"};
  }
  if (c.opponents.empty()) c.opponents.assign(c.params.players - 1, "OSLA");
  if (c.space.is_null()) c.space = (default_data_dir() / "spaces" / "bmrh.json").string();
}

SearchSpace resolve_space(const ExperimentConfig& c) {
  if (c.space.is_string()) {
    std::string path = c.space.get<std::string>();
    std::ifstream probe(path);
    if (!probe) {
      // Bare names refer to the bundled spaces.
      std::string bundled = (default_data_dir() / "spaces" / path).string();
      if (std::ifstream(bundled)) path = bundled;
      else if (std::ifstream(bundled + ".json")) path = bundled + ".json";
    }
    return load_search_space(path);
  }
  return c.space.get<SearchSpace>();
}

LineupReport cmd_play(const ExperimentConfig& c) { return run_lineup(c, false); }

LineupReport cmd_match(const ExperimentConfig& c) { return run_lineup(c, true); }

std::vector<PairReport> cmd_roundrobin(const ExperimentConfig& c) {
  if (c.agents.size() < 2) throw UsageError("round robin needs at least two agents");
  for (const auto& a : c.agents) make_agent(a);
  GameParams params = c.params;
  params.players = 2;
  params.validate();
  ContentPtr content = default_content();
  RunOptions run;
  run.tick_budget = c.budget;
  run.max_ticks = c.max_ticks;

  std::vector<PairReport> out;
  std::uint64_t pair = 0;
  for (std::size_t a = 0; a < c.agents.size(); ++a) {
    for (std::size_t b = a + 1; b < c.agents.size(); ++b, ++pair) {
      const std::uint64_t pair_seed = mix_seed(c.seed, pair);
      std::vector<double> first(c.games), second(c.games);
      std::vector<int> stale(c.games);
      parallel_for(c.games, c.jobs, [&](int g) {
        const bool swap = g % 2 == 1;
        AgentPtr x = make_agent(c.agents[a]), y = make_agent(c.agents[b]);
        Agent* seats[2] = {swap ? y.get() : x.get(), swap ? x.get() : y.get()};
        auto r = run_game(params, content, seats, mix_seed(pair_seed, static_cast<std::uint64_t>(g)), run);
        first[g] = r.credit(swap ? 1 : 0);
        second[g] = r.credit(swap ? 0 : 1);
        stale[g] = r.outcome == Outcome::Stalemate;
      });
      PairReport p;
      p.first = agent_label(c.agents[a]);
      p.second = agent_label(c.agents[b]);
      p.games = c.games;
      double fa = 0, fb = 0, sm = 0;
      for (int g = 0; g < c.games; ++g) {
        fa += first[g];
        fb += second[g];
        sm += stale[g];
      }
      p.first_win = make_rate(fa, c.games);
      p.second_win = make_rate(fb, c.games);
      p.stalemate = make_rate(sm, c.games);
      out.push_back(p);
    }
  }
  return out;
}

std::vector<TuneRow> cmd_tune(const ExperimentConfig& c) {
  const SearchSpace space = resolve_space(c);
  if (c.repeats < 0) throw UsageError("repeats must be >= 0");
  if (static_cast<int>(c.opponents.size()) != c.params.players - 1)
    throw UsageError("tune needs P-1 opponents");
  for (int b : c.budgets)
    if (b < 1) throw UsageError("NTBEA budgets must be >= 1");
  const EvalSettings settings = eval_settings(c, 1);
  const int players = c.params.players;
  const auto cards = space.cardinalities();

  std::vector<TuneRow> rows(c.budgets.size() * static_cast<std::size_t>(c.repeats));
  parallel_for(static_cast<int>(rows.size()), c.jobs, [&](int t) {
    TuneRow& row = rows[t];
    row.budget = c.budgets[t / c.repeats];
    row.repeat = t % c.repeats;
    const std::uint64_t task_seed = mix_seed(mix_seed(c.seed, row.budget), row.repeat);
    NtbeaOptions opts = c.ntbea;
    opts.budget = row.budget;
    auto evaluate = [&](const Point& p, std::uint64_t seed) {
      return game_credit(space.config(p), c.opponents, static_cast<int>(seed % players), seed,
                         settings);
    };
    NtbeaResult res = ntbea_run(cards, evaluate, opts, task_seed);
    row.config = space.config(res.best);
    row.estimate = res.estimate;
    const double fitness =
        evaluate_config(row.config, c.eval_games, c.opponents, mix_seed(task_seed, 0xF17), settings);
    row.fitness = make_rate(fitness * c.eval_games, c.eval_games);
  });
  return rows;
}

std::vector<GridRow> cmd_grid(const ExperimentConfig& c) {
  const SearchSpace space = resolve_space(c);
  if (static_cast<int>(c.opponents.size()) != c.params.players - 1)
    throw UsageError("grid needs P-1 opponents");
  const EvalSettings settings = eval_settings(c, 1);
  auto evaluate = [&](const Point& p, int games, std::uint64_t seed) {
    return evaluate_config(space.config(p), games, c.opponents, seed, settings);
  };
  auto entries = grid_search(space, evaluate, c.games, c.seed, c.jobs, c.sample);
  std::vector<GridRow> rows;
  for (const auto& e : entries)
    rows.push_back({space.config(e.point), make_rate(e.fitness * e.games, e.games)});
  return rows;
}

void write_games_csv(std::ostream& out, const LineupReport& r) {
  const std::size_t n = r.labels.size();
  out << "game,seed,outcome,ticks";
  for (std::size_t i = 0; i < n; ++i)
    out << ",agent_" << i << ",seat_" << i << ",prestige_" << i << ",cards_" << i << ",credit_" << i;
  out << '\n';
  for (std::size_t g = 0; g < r.games.size(); ++g) {
    const auto& row = r.games[g];
    out << g << ',' << row.seed << ',' << to_string(row.result.outcome) << ',' << row.result.ticks;
    for (std::size_t i = 0; i < n; ++i) {
      int seat = 0;
      while (row.seating[seat] != static_cast<int>(i)) ++seat;
      out << ',' << r.labels[i] << ',' << seat << ',' << row.result.prestige[seat] << ','
          << row.result.card_counts[seat] << ',' << row.result.credit(seat);
    }
    out << '\n';
  }
}

void write_pairs_csv(std::ostream& out, const std::vector<PairReport>& rows) {
  out << "first,second,games,first_win,first_se,second_win,second_se,stalemate,stalemate_se\n";
  for (const auto& p : rows)
    out << p.first << ',' << p.second << ',' << p.games << ',' << p.first_win.p << ','
        << p.first_win.se << ',' << p.second_win.p << ',' << p.second_win.se << ','
        << p.stalemate.p << ',' << p.stalemate.se << '\n';
}

void write_tune_csv(std::ostream& out, const std::vector<TuneRow>& rows) {
  out << "budget,repeat,fitness,fitness_se,games,estimate,config\n";
  for (const auto& r : rows)
    out << r.budget << ',' << r.repeat << ',' << r.fitness.p << ',' << r.fitness.se << ','
        << r.fitness.n << ',' << r.estimate << ',' << csv_quote(r.config.dump()) << '\n';
}

void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows) {
  out << "rank,fitness,fitness_se,games,config\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    out << i + 1 << ',' << rows[i].fitness.p << ',' << rows[i].fitness.se << ','
        << rows[i].fitness.n << ',' << csv_quote(rows[i].config.dump()) << '\n';
}

void print_lineup(std::ostream& out, const LineupReport& r) {
  out << "games " << r.games.size() << "\n";
  for (std::size_t i = 0; i < r.labels.size(); ++i)
    out << "  [" << i << "] " << std::left << std::setw(8) << r.labels[i] << " win "
        << pct(r.win[i]) << "  decided " << pct(r.win_decided[i]) << "\n";
  out << "stalemate " << pct(r.stalemate) << "  timeout " << pct(r.timeout) << "\n";
  out << std::fixed << std::setprecision(2) << "duration mean " << r.duration.mean << " sd "
      << r.duration.sd << " min " << r.duration.min << " max " << r.duration.max << "\n";
  out.unsetf(std::ios::fixed);
}

void print_pairs(std::ostream& out, const std::vector<PairReport>& rows) {
  for (const auto& p : rows)
    out << p.first << " vs " << p.second << ": " << pct(p.first_win) << " / " << pct(p.second_win)
        << "  SM " << pct(p.stalemate) << "  (" << p.games << " games)\n";
}

void print_tune(std::ostream& out, const std::vector<TuneRow>& rows) {
  for (const auto& r : rows)
    out << "budget " << r.budget << " repeat " << r.repeat << ": fitness " << pct(r.fitness)
        << "  " << r.config.dump() << "\n";
}

void print_grid(std::ostream& out, const std::vector<GridRow>& rows, std::size_t top) {
  out << rows.size() << " configs\n";
  for (std::size_t i = 0; i < rows.size() && i < top; ++i)
    out << "  " << i + 1 << ". " << pct(rows[i].fitness) << "  " << rows[i].config.dump() << "\n";
}

}  // namespace spl

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "spl/core/params.hpp"
#include "spl/engine/game.hpp"
#include "spl/experiments/stats.hpp"
#include "spl/tuning/grid.hpp"
#include "spl/tuning/ntbea.hpp"
#include "spl/tuning/search_space.hpp"

namespace spl {

/// Settings shared by every command. JSON keys mirror the field names;
/// `params` is a game-parameter object, agents are agent specs.
struct ExperimentConfig {
  GameParams params;
  std::vector<nlohmann::json> agents;     // play/match/roundrobin lineup
  std::vector<nlohmann::json> opponents;  // tune/grid opponents (P-1 specs)
  int games = 1000;
  std::uint64_t seed = 1;
  std::int64_t budget = kDefaultTickBudget;
  int max_ticks = kDefaultMaxTicks;
  int jobs = 1;
  std::string out;

  // tune / grid
  nlohmann::json space;  // inline space object, or a path string
  std::vector<int> budgets{50, 100, 200, 500, 1000};
  int repeats = 1;
  int eval_games = 200;
  std::uint64_t sample = 0;  // grid: evaluate a random subset of this size
  NtbeaOptions ntbea;

  // bench
  double seconds = 10;
};

void from_json(const nlohmann::json& j, ExperimentConfig& c);

/// Fills command-specific defaults (lineups, space) left empty by the user.
void apply_defaults(ExperimentConfig& c, const std::string& command);

SearchSpace resolve_space(const ExperimentConfig& c);

struct GameRow {
  std::uint64_t seed = 0;
  std::vector<int> seating;  // seating[seat] = lineup index
  GameResult result;
};

struct LineupReport {
  std::vector<std::string> labels;
  std::vector<Rate> win;            // credit per lineup entry over all games
  std::vector<Rate> win_decided;    // same, ignoring stalemates
  Rate stalemate;
  Rate timeout;
  Moments duration;
  std::vector<GameRow> games;
};

/// Fixed seats: agent i always plays seat i.
LineupReport cmd_play(const ExperimentConfig& c);
/// Seat rotation: in game g, lineup entry i sits at seat (i + g) mod P.
LineupReport cmd_match(const ExperimentConfig& c);

struct PairReport {
  std::string first, second;
  Rate first_win, second_win, stalemate;
  int games = 0;
};

/// Every unordered pair plays `games` two-player games, alternating seats.
std::vector<PairReport> cmd_roundrobin(const ExperimentConfig& c);

struct TuneRow {
  int budget = 0;
  int repeat = 0;
  nlohmann::json config;
  double estimate = 0;
  Rate fitness;
};

/// NTBEA `repeats` times per budget, each recommendation scored over
/// eval_games games against the opponents.
std::vector<TuneRow> cmd_tune(const ExperimentConfig& c);

struct GridRow {
  nlohmann::json config;
  Rate fitness;
};

std::vector<GridRow> cmd_grid(const ExperimentConfig& c);

// CSV writers; headers are documented in the README.
void write_games_csv(std::ostream& out, const LineupReport& r);
void write_pairs_csv(std::ostream& out, const std::vector<PairReport>& rows);
void write_tune_csv(std::ostream& out, const std::vector<TuneRow>& rows);
void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows);

// Human summaries.
void print_lineup(std::ostream& out, const LineupReport& r);
void print_pairs(std::ostream& out, const std::vector<PairReport>& rows);
void print_tune(std::ostream& out, const std::vector<TuneRow>& rows);
void print_grid(std::ostream& out, const std::vector<GridRow>& rows, std::size_t top = 10);

}  // namespace spl

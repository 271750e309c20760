#pragma once

#include <array>
#include <string>

#include <json.hpp>

namespace spl {

/// The thirteen integers that define a Splendor-like rule set.
/// Defaults are the four-player commercial game.
struct GameParams {
  int players = 4;                // P
  int token_types = 5;            // nTT
  int jokers = 5;                 // nJT
  int decks = 3;                  // D
  int face_up = 4;                // FUC
  int extra_nobles = 1;           // EN
  int max_tokens = 10;            // maxT
  int max_reserved = 3;           // maxRC
  int prestige_goal = 15;         // PP
  int pick_different_suits = 3;   // nTTPD
  int pick_different_tokens = 1;  // nTPD
  int pick_same_tokens = 2;       // nTPS
  int pick_same_min = 4;          // minTPS

  /// Common tokens per suit placed on the table at setup: P+2, except the
  /// four-player game which uses the full seven-token stacks.
  int tokens_per_suit() const noexcept { return players == 4 ? 7 : players + 2; }
  int noble_count() const noexcept { return players + extra_nobles; }

  /// Throws UsageError when a value is out of its domain.
  void validate() const;

  /// The vector in table order [P, nTT, nJT, D, FUC, EN, maxT, maxRC, PP,
  /// nTTPD, nTPD, nTPS, minTPS].
  std::array<int, 13> as_vector() const noexcept;

  bool operator==(const GameParams&) const = default;
};

/// Short symbol names, in as_vector() order; also the JSON keys.
inline constexpr std::array<const char*, 13> kParamSymbols = {
    "P", "nTT", "nJT", "D", "FUC", "EN", "maxT",
    "maxRC", "PP", "nTTPD", "nTPD", "nTPS", "minTPS"};

void to_json(nlohmann::json& j, const GameParams& p);
/// Missing keys keep their defaults; unknown keys are rejected.
void from_json(const nlohmann::json& j, GameParams& p);

}  // namespace spl

#pragma once

#include <cstdint>
#include <optional>

#include <boost/container/small_vector.hpp>

#include "spl/core/content.hpp"
#include "spl/core/params.hpp"
#include "spl/core/rng.hpp"
#include "spl/core/tokens.hpp"

namespace spl {

template <typename T, std::size_t N>
using SmallVec = boost::container::small_vector<T, N>;

/// Index into ContentSet::cards / ContentSet::nobles.
using CardId = std::uint8_t;
using NobleId = std::uint8_t;

struct ReservedCard {
  CardId card = 0;
  bool from_deck = false;  // drawn face-down; hidden from opponents
  bool operator==(const ReservedCard&) const = default;
};

struct PlayerState {
  TokenVector hand;
  TokenVector bonus;  // purchased cards per bonus suit; joker entry stays 0
  SmallVec<CardId, 24> purchased;
  SmallVec<ReservedCard, 3> reserved;
  SmallVec<NobleId, 3> nobles;
  int prestige = 0;

  bool operator==(const PlayerState&) const = default;
};

using Deck = SmallVec<CardId, 40>;
using Row = SmallVec<CardId, 4>;

/// Full game state. Copies are deep and independent, and share only the
/// immutable content set.
struct GameState {
  GameParams params;
  ContentPtr content;
  TokenVector table;
  SmallVec<Deck, 3> decks;     // index = level - 1; back() is the top card
  SmallVec<Row, 3> face_up;    // face-up cards per deck
  SmallVec<NobleId, 5> nobles;
  SmallVec<PlayerState, 4> players;
  int tick = 0;
  int current = 0;
  bool final_round = false;
  bool over = false;
  Rng rng;

  const Card& card(CardId id) const { return content->cards[id]; }
  const Noble& noble(NobleId id) const { return content->nobles[id]; }
  int player_count() const noexcept { return static_cast<int>(players.size()); }

  bool operator==(const GameState&) const = default;
};

/// Deals a new game. Identical inputs give identical states.
/// Throws SetupError for unsupported parameters or insufficient content.
GameState new_game(const GameParams& params, ContentPtr content, std::uint64_t seed);

/// Prestige of `player`. Throws UsageError when out of range.
int score(const GameState& state, int player);

/// Copy with hidden information resampled from `observer`'s viewpoint:
/// deck orders are reshuffled and opponents' face-down reservations are
/// swapped with random undealt cards of the same level.
GameState copy_for_player(const GameState& state, int observer, std::uint64_t seed);

/// FNV-1a over every mutable field. Equal states hash equal.
std::uint64_t state_hash(const GameState& state);

/// Returns a description of the first broken conservation or cache
/// invariant, or nullopt when the state is consistent.
std::optional<std::string> check_invariants(const GameState& state);

}  // namespace spl

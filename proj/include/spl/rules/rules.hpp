#pragma once

#include <optional>
#include <string>

#include "spl/core/state.hpp"
#include "spl/rules/action.hpp"

namespace spl {

/// Price after bonus discounts; never negative, joker entry 0.
TokenVector discounted_price(const Card& card, const PlayerState& player);

/// Suit tokens first, jokers for each shortfall; nullopt if jokers cannot
/// cover the total shortfall.
std::optional<TokenVector> canonical_payment(const Card& card, const PlayerState& player);

/// True when `payment` exactly covers the discounted price with tokens the
/// player holds (any valid joker allocation is accepted).
bool payment_covers(const Card& card, const PlayerState& player, const TokenVector& payment);

/// Names the first rule `action` breaks in `state`, or nullopt if legal.
std::optional<std::string> check_action(const GameState& state, const Action& action);

inline bool is_legal(const GameState& state, const Action& action) {
  return !check_action(state, action);
}

/// Applies a legal action for the player to move: active effect, give-back,
/// noble pass, then turn advance and end-game bookkeeping.
/// Throws RuleViolation for an illegal action, UsageError for a bad player.
void apply(GameState& state, const Action& action);

/// Passive rule for `player`: acquires the lowest-index table noble whose
/// requirement is met, if any. Returns whether a noble was taken.
bool noble_pass(GameState& state, int player);

/// Ends the current player's turn without an action (noble pass, advance).
void skip_turn(GameState& state);

enum class GamePhase { Continue, FinalRound, Over };

/// Marks the final round once anyone reaches PP; the game is over when the
/// final round is flagged and the turn pointer has wrapped to player 0.
GamePhase is_game_over(GameState& state);

}  // namespace spl

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "spl/core/tokens.hpp"

namespace spl {

enum class ActionKind : std::uint8_t {
  PickDifferent,
  PickSame,
  ReserveTable,
  ReserveDeck,
  BuyTable,
  BuyReserved,
};

inline constexpr std::array<ActionKind, 6> kActionKinds = {
    ActionKind::PickDifferent, ActionKind::PickSame,  ActionKind::ReserveTable,
    ActionKind::ReserveDeck,   ActionKind::BuyTable, ActionKind::BuyReserved};

const char* to_string(ActionKind kind);

/// One active action. Which payload fields are meaningful depends on kind:
///   PickDifferent  suit_mask
///   PickSame       suit
///   ReserveTable   deck, slot (face-up position), card
///   ReserveDeck    deck
///   BuyTable       deck, slot, card, payment
///   BuyReserved    slot (reserved position), card, payment
/// give_back applies to every kind and is zero unless the hand overflows.
struct Action {
  ActionKind kind = ActionKind::PickDifferent;
  std::int8_t player = 0;
  std::uint8_t suit_mask = 0;
  std::int8_t suit = -1;
  std::int8_t deck = -1;
  std::int8_t slot = -1;
  std::int16_t card = -1;
  TokenVector give_back;
  TokenVector payment;

  bool operator==(const Action&) const = default;
};

std::string to_string(const Action& action);

}  // namespace spl

#include "spl/rules/action.hpp"

namespace spl {

const char* to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::PickDifferent: return "PICK_DIFFERENT";
    case ActionKind::PickSame: return "PICK_SAME";
    case ActionKind::ReserveTable: return "RESERVE_TABLE";
    case ActionKind::ReserveDeck: return "RESERVE_DECK";
    case ActionKind::BuyTable: return "BUY_TABLE";
    case ActionKind::BuyReserved: return "BUY_RESERVED";
  }
  return "?";
}

std::string to_string(const Action& a) {
  std::string out = std::string(to_string(a.kind)) + " p" + std::to_string(a.player);
  switch (a.kind) {
    case ActionKind::PickDifferent: {
      out += " suits={";
      bool first = true;
      for (int s = 0; s < kMaxSuits; ++s) {
        if (a.suit_mask & (1u << s)) {
          if (!first) out += ',';
          out += std::to_string(s);
          first = false;
        }
      }
      out += '}';
      break;
    }
    case ActionKind::PickSame: out += " suit=" + std::to_string(a.suit); break;
    case ActionKind::ReserveTable:
    case ActionKind::BuyTable:
      out += " deck=" + std::to_string(a.deck) + " slot=" + std::to_string(a.slot) +
             " card=" + std::to_string(a.card);
      break;
    case ActionKind::ReserveDeck: out += " deck=" + std::to_string(a.deck); break;
    case ActionKind::BuyReserved:
      out += " reserved=" + std::to_string(a.slot) + " card=" + std::to_string(a.card);
      break;
  }
  if (a.kind == ActionKind::BuyTable || a.kind == ActionKind::BuyReserved)
    out += " pay=" + to_string(a.payment);
  if (a.give_back.total() != 0) out += " give_back=" + to_string(a.give_back);
  return out;
}

}  // namespace spl

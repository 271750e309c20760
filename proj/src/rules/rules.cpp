#include "spl/rules/rules.hpp"

#include <algorithm>
#include <bit>

#include "spl/core/errors.hpp"

namespace spl {

TokenVector discounted_price(const Card& card, const PlayerState& player) {
  TokenVector out;
  for (int s = 0; s < kMaxSuits; ++s)
    out.suit[s] = static_cast<std::int16_t>(std::max(0, card.price.suit[s] - player.bonus.suit[s]));
  return out;
}

std::optional<TokenVector> canonical_payment(const Card& card, const PlayerState& player) {
  TokenVector due = discounted_price(card, player);
  TokenVector pay;
  int shortfall = 0;
  for (int s = 0; s < kMaxSuits; ++s) {
    pay.suit[s] = std::min(due.suit[s], player.hand.suit[s]);
    shortfall += due.suit[s] - pay.suit[s];
  }
  if (shortfall > player.hand.joker) return std::nullopt;
  pay.joker = static_cast<std::int16_t>(shortfall);
  return pay;
}

bool payment_covers(const Card& card, const PlayerState& player, const TokenVector& payment) {
  if (payment.any_negative() || !payment.within(player.hand)) return false;
  TokenVector due = discounted_price(card, player);
  int shortfall = 0;
  for (int s = 0; s < kMaxSuits; ++s) {
    if (payment.suit[s] > due.suit[s]) return false;
    shortfall += due.suit[s] - payment.suit[s];
  }
  return shortfall == payment.joker;
}

namespace {

bool reserve_grants_joker(const GameState& s) { return s.table.joker > 0; }

}  // namespace

std::optional<std::string> check_action(const GameState& s, const Action& a) {
  const auto& params = s.params;
  if (a.player < 0 || a.player >= s.player_count()) return "player index out of range";
  if (s.over) return "the game is over";
  if (a.player != s.current) return "it is not this player's turn";
  const PlayerState& me = s.players[a.player];
  if (a.give_back.any_negative()) return "give-back cannot be negative";

  TokenVector post = me.hand;
  switch (a.kind) {
    case ActionKind::PickDifferent: {
      unsigned mask = a.suit_mask;
      if (mask == 0) return "pick different needs at least one suit";
      if (mask >> params.token_types) return "pick different names an unknown suit";
      if (std::popcount(mask) > params.pick_different_suits)
        return "pick different takes at most nTTPD suits";
      for (int t = 0; t < params.token_types; ++t) {
        if (!(mask & (1u << t))) continue;
        if (s.table.suit[t] < params.pick_different_tokens)
          return "pick different needs nTPD tokens of each chosen suit on the table";
        post.suit[t] += params.pick_different_tokens;
      }
      break;
    }
    case ActionKind::PickSame: {
      if (a.suit < 0 || a.suit >= params.token_types) return "pick same names an unknown suit";
      if (s.table.suit[a.suit] < params.pick_same_min)
        return "pick same needs a stack of at least minTPS tokens";
      if (s.table.suit[a.suit] < params.pick_same_tokens)
        return "pick same needs nTPS tokens on the table";
      post.suit[a.suit] += params.pick_same_tokens;
      break;
    }
    case ActionKind::ReserveTable:
    case ActionKind::ReserveDeck: {
      if (static_cast<int>(me.reserved.size()) >= params.max_reserved)
        return "reserving is limited to maxRC cards";
      if (a.deck < 0 || a.deck >= params.decks) return "reserve names an unknown deck";
      if (a.kind == ActionKind::ReserveTable) {
        const auto& row = s.face_up[a.deck];
        if (a.slot < 0 || a.slot >= static_cast<int>(row.size()))
          return "reserve table names an empty face-up slot";
        if (a.card != row[a.slot]) return "reserve table card does not match the slot";
      } else if (s.decks[a.deck].empty()) {
        return "reserve deck needs a non-empty deck";
      }
      if (reserve_grants_joker(s)) ++post.joker;
      break;
    }
    case ActionKind::BuyTable: {
      if (a.deck < 0 || a.deck >= params.decks) return "buy names an unknown deck";
      const auto& row = s.face_up[a.deck];
      if (a.slot < 0 || a.slot >= static_cast<int>(row.size()))
        return "buy table names an empty face-up slot";
      if (a.card != row[a.slot]) return "buy table card does not match the slot";
      if (!payment_covers(s.card(row[a.slot]), me, a.payment))
        return "payment must exactly cover the discounted price";
      post -= a.payment;
      break;
    }
    case ActionKind::BuyReserved: {
      if (a.slot < 0 || a.slot >= static_cast<int>(me.reserved.size()))
        return "buy reserved names an empty reserved slot";
      if (a.card != me.reserved[a.slot].card) return "buy reserved card does not match the slot";
      if (!payment_covers(s.card(me.reserved[a.slot].card), me, a.payment))
        return "payment must exactly cover the discounted price";
      post -= a.payment;
      break;
    }
    default:
      return "unknown action kind";
  }

  int excess = post.total() - params.max_tokens;
  if (excess > 0) {
    if (!a.give_back.within(post)) return "give-back exceeds the tokens held";
    if (a.give_back.total() != excess)
      return "give-back must bring the hand down to exactly maxT tokens";
  } else if (a.give_back.total() != 0) {
    return "give-back is only allowed above maxT tokens";
  }
  return std::nullopt;
}

namespace {

void refill(GameState& s, int deck, int slot) {
  auto& row = s.face_up[deck];
  auto& pile = s.decks[deck];
  if (!pile.empty()) {
    row[slot] = pile.back();
    pile.pop_back();
  } else {
    row.erase(row.begin() + slot);
  }
}

void take_card(PlayerState& me, const GameState& s, CardId id) {
  const Card& c = s.card(id);
  me.purchased.push_back(id);
  ++me.bonus.suit[c.bonus];
  me.prestige += c.value;
}

void end_turn(GameState& s) {
  noble_pass(s, s.current);
  ++s.tick;
  s.current = (s.current + 1) % s.player_count();
  is_game_over(s);
}

}  // namespace

void apply(GameState& s, const Action& a) {
  if (a.player < 0 || a.player >= s.player_count())
    throw UsageError("action for absent player " + std::to_string(a.player));
  if (auto why = check_action(s, a)) throw RuleViolation(*why + ": " + to_string(a));

  const auto& params = s.params;
  PlayerState& me = s.players[a.player];
  switch (a.kind) {
    case ActionKind::PickDifferent:
      for (int t = 0; t < params.token_types; ++t) {
        if (a.suit_mask & (1u << t)) {
          s.table.suit[t] -= params.pick_different_tokens;
          me.hand.suit[t] += params.pick_different_tokens;
        }
      }
      break;
    case ActionKind::PickSame:
      s.table.suit[a.suit] -= params.pick_same_tokens;
      me.hand.suit[a.suit] += params.pick_same_tokens;
      break;
    case ActionKind::ReserveTable:
    case ActionKind::ReserveDeck: {
      if (a.kind == ActionKind::ReserveTable) {
        me.reserved.push_back({s.face_up[a.deck][a.slot], false});
        refill(s, a.deck, a.slot);
      } else {
        me.reserved.push_back({s.decks[a.deck].back(), true});
        s.decks[a.deck].pop_back();
      }
      if (s.table.joker > 0) {
        --s.table.joker;
        ++me.hand.joker;
      }
      break;
    }
    case ActionKind::BuyTable:
      me.hand -= a.payment;
      s.table += a.payment;
      take_card(me, s, s.face_up[a.deck][a.slot]);
      refill(s, a.deck, a.slot);
      break;
    case ActionKind::BuyReserved:
      me.hand -= a.payment;
      s.table += a.payment;
      take_card(me, s, me.reserved[a.slot].card);
      me.reserved.erase(me.reserved.begin() + a.slot);
      break;
  }
  me.hand -= a.give_back;
  s.table += a.give_back;
  end_turn(s);
}

bool noble_pass(GameState& s, int player) {
  PlayerState& me = s.players[player];
  for (std::size_t i = 0; i < s.nobles.size(); ++i) {
    const Noble& n = s.noble(s.nobles[i]);
    if (n.requirement.within(me.bonus)) {
      me.nobles.push_back(s.nobles[i]);
      me.prestige += n.value;
      s.nobles.erase(s.nobles.begin() + static_cast<std::ptrdiff_t>(i));
      return true;
    }
  }
  return false;
}

void skip_turn(GameState& s) {
  if (s.over) throw RuleViolation("the game is over");
  end_turn(s);
}

GamePhase is_game_over(GameState& s) {
  if (!s.final_round) {
    for (const auto& p : s.players) {
      if (p.prestige >= s.params.prestige_goal) {
        s.final_round = true;
        break;
      }
    }
  }
  s.over = s.final_round && s.current == 0;
  if (s.over) return GamePhase::Over;
  return s.final_round ? GamePhase::FinalRound : GamePhase::Continue;
}

}  // namespace spl

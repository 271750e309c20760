// Fixtures and independent oracles shared by the unit tests and the
// acceptance binary.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "spl/core/content.hpp"
#include "spl/core/state.hpp"
#include "spl/rules/action.hpp"
#include "spl/rules/generators.hpp"
#include "spl/rules/rules.hpp"

namespace spl::test {

inline GameState fresh_game(int players = 4, std::uint64_t seed = 42) {
  GameParams p;
  p.players = players;
  return new_game(p, default_content(), seed);
}

/// Advances with random actions for up to `steps` actions; stops early on
/// game over or stalemate. Returns the number of actions applied.
inline int random_walk(GameState& s, int steps, std::uint64_t seed) {
  Rng rng(seed);
  int done = 0;
  while (done < steps && !s.over) {
    auto a = try_random_action(s, s.current, rng());
    if (!a) break;
    apply(s, *a);
    ++done;
  }
  return done;
}

/// Every token vector v with v.suit[s] in [0, hi.suit[s]], joker in
/// [0, hi.joker], over the first `suits` suits.
inline void for_each_below(const TokenVector& hi, int suits,
                           const std::function<void(const TokenVector&)>& fn) {
  TokenVector v;
  std::function<void(int)> rec = [&](int i) {
    if (i == suits) {
      for (int j = 0; j <= hi.joker; ++j) {
        v.joker = static_cast<std::int16_t>(j);
        fn(v);
      }
      v.joker = 0;
      return;
    }
    for (int x = 0; x <= hi.suit[i]; ++x) {
      v.suit[i] = static_cast<std::int16_t>(x);
      rec(i + 1);
    }
    v.suit[i] = 0;
  };
  rec(0);
}

/// Every token vector over `suits` suits plus jokers with total <= `max_total`.
inline void for_each_small(int suits, int max_total,
                           const std::function<void(const TokenVector&)>& fn) {
  TokenVector hi;
  for (int s = 0; s < suits; ++s) hi.suit[s] = static_cast<std::int16_t>(max_total);
  hi.joker = static_cast<std::int16_t>(max_total);
  for_each_below(hi, suits, [&](const TokenVector& v) {
    if (v.total() <= max_total) fn(v);
  });
}

/// Affordability by trying every way to spend jokers on each suit.
inline bool affordable_brute_force(const Card& card, const PlayerState& p, int suits) {
  std::vector<int> need(suits);
  for (int s = 0; s < suits; ++s) need[s] = std::max(0, card.price.suit[s] - p.bonus.suit[s]);
  std::function<bool(int, int)> rec = [&](int s, int jokers_left) {
    if (s == suits) return true;
    for (int j = 0; j <= jokers_left; ++j)
      if (p.hand.suit[s] + j >= need[s] && rec(s + 1, jokers_left - j)) return true;
    return false;
  };
  return rec(0, p.hand.joker);
}

/// Exhaustive legality oracle: every candidate action of `kind` for the
/// player to move, kept when check_action accepts it. Give-backs up to
/// `max_give_back` tokens and every payment within the hand are tried.
inline std::vector<Action> legal_actions(const GameState& s, ActionKind kind,
                                         int max_give_back = 3) {
  std::vector<Action> out;
  const int player = s.current;
  const auto& params = s.params;
  const int suits = params.token_types;
  const PlayerState& me = s.players[player];

  std::vector<TokenVector> give_backs;
  for_each_small(suits, max_give_back, [&](const TokenVector& g) { give_backs.push_back(g); });

  auto try_all_give_backs = [&](Action a) {
    for (const auto& g : give_backs) {
      a.give_back = g;
      if (is_legal(s, a)) out.push_back(a);
    }
  };
  auto try_all_payments = [&](Action a) {
    for_each_below(me.hand, suits, [&](const TokenVector& pay) {
      a.payment = pay;
      if (is_legal(s, a)) out.push_back(a);
    });
  };

  Action a;
  a.kind = kind;
  a.player = static_cast<std::int8_t>(player);
  switch (kind) {
    case ActionKind::PickDifferent:
      for (unsigned mask = 1; mask < (1u << suits); ++mask) {
        a.suit_mask = static_cast<std::uint8_t>(mask);
        try_all_give_backs(a);
      }
      break;
    case ActionKind::PickSame:
      for (int t = 0; t < suits; ++t) {
        a.suit = static_cast<std::int8_t>(t);
        try_all_give_backs(a);
      }
      break;
    case ActionKind::ReserveTable:
      for (int d = 0; d < params.decks; ++d)
        for (int slot = 0; slot < static_cast<int>(s.face_up[d].size()); ++slot) {
          a.deck = static_cast<std::int8_t>(d);
          a.slot = static_cast<std::int8_t>(slot);
          a.card = s.face_up[d][slot];
          try_all_give_backs(a);
        }
      break;
    case ActionKind::ReserveDeck:
      for (int d = 0; d < params.decks; ++d) {
        a.deck = static_cast<std::int8_t>(d);
        try_all_give_backs(a);
      }
      break;
    case ActionKind::BuyTable:
      for (int d = 0; d < params.decks; ++d)
        for (int slot = 0; slot < static_cast<int>(s.face_up[d].size()); ++slot) {
          a.deck = static_cast<std::int8_t>(d);
          a.slot = static_cast<std::int8_t>(slot);
          a.card = s.face_up[d][slot];
          try_all_payments(a);
        }
      break;
    case ActionKind::BuyReserved:
      for (int slot = 0; slot < static_cast<int>(me.reserved.size()); ++slot) {
        a.slot = static_cast<std::int8_t>(slot);
        a.card = me.reserved[slot].card;
        try_all_payments(a);
      }
      break;
  }
  return out;
}

/// Independent recount of the conservation laws.
struct Conservation {
  bool tokens = true, jokers = true, cards = true, nobles = true, prestige = true, hands = true;
  bool ok() const { return tokens && jokers && cards && nobles && prestige && hands; }
};

inline Conservation recount(const GameState& s) {
  Conservation c;
  const auto& p = s.params;
  for (int t = 0; t < p.token_types; ++t) {
    int sum = s.table.suit[t];
    for (const auto& pl : s.players) sum += pl.hand.suit[t];
    if (sum != p.tokens_per_suit()) c.tokens = false;
  }
  int jokers = s.table.joker;
  for (const auto& pl : s.players) jokers += pl.hand.joker;
  c.jokers = jokers == p.jokers;
  std::size_t cards = 0;
  for (const auto& d : s.decks) cards += d.size();
  for (const auto& r : s.face_up) cards += r.size();
  std::size_t nobles = s.nobles.size();
  for (const auto& pl : s.players) {
    cards += pl.purchased.size() + pl.reserved.size();
    nobles += pl.nobles.size();
    int prestige = 0;
    for (auto id : pl.purchased) prestige += s.card(id).value;
    for (auto id : pl.nobles) prestige += s.noble(id).value;
    if (prestige != pl.prestige) c.prestige = false;
    if (pl.hand.total() > p.max_tokens || static_cast<int>(pl.reserved.size()) > p.max_reserved ||
        pl.hand.any_negative())
      c.hands = false;
  }
  c.cards = cards == s.content->cards.size();
  c.nobles = static_cast<int>(nobles) == p.noble_count();
  return c;
}

/// Player 0 to move with three unaffordable reservations and an empty
/// table: no legal action at all.
inline GameState stalemate_state() {
  auto s = fresh_game(4, 12);
  auto& me = s.players[0];
  for (int i = 0; i < 3; ++i) {
    me.reserved.push_back({s.decks[2].back(), true});
    s.decks[2].pop_back();
  }
  for (int t = 0; t < 5; ++t) {
    const int n = s.table.suit[t];
    s.table.suit[t] = 0;
    s.players[1 + t % 3].hand.suit[t] += static_cast<std::int16_t>(n);
  }
  return s;
}

/// As stalemate_state() with one token of suit 0 back on the table, so the
/// only legal action picks it.
inline GameState single_action_state() {
  auto s = stalemate_state();
  s.players[1].hand.suit[0] -= 1;
  s.table.suit[0] += 1;
  return s;
}

}  // namespace spl::test

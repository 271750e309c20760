#include "spl/rules/generators.hpp"

#include "spl/core/errors.hpp"
#include "spl/rules/rules.hpp"

namespace spl {

namespace {

/// Returns tokens one at a time, uniformly over the tokens in `post`,
/// until the hand is down to `limit`.
TokenVector sample_give_back(TokenVector post, int limit, Rng& rng) {
  TokenVector back;
  int total = post.total();
  while (total > limit) {
    int pick = static_cast<int>(rng.below(static_cast<std::uint32_t>(total)));
    bool done = false;
    for (int s = 0; s < kMaxSuits && !done; ++s) {
      if (pick < post.suit[s]) {
        --post.suit[s];
        ++back.suit[s];
        done = true;
      } else {
        pick -= post.suit[s];
      }
    }
    if (!done) {
      --post.joker;
      ++back.joker;
    }
    --total;
  }
  return back;
}

struct Slot {
  std::int8_t deck;
  std::int8_t slot;
};

bool can_reserve(const GameState& s, const PlayerState& me) {
  return static_cast<int>(me.reserved.size()) < s.params.max_reserved;
}

bool pick_same_ok(const GameState& s, int suit) {
  int stack = s.table.suit[suit];
  return stack >= s.params.pick_same_min && stack >= s.params.pick_same_tokens;
}

TokenVector after_reserve(const GameState& s, const PlayerState& me) {
  TokenVector post = me.hand;
  if (s.table.joker > 0) ++post.joker;
  return post;
}

}  // namespace

std::optional<Action> generate(ActionKind kind, const GameState& s, int player,
                               std::uint64_t seed) {
  if (player < 0 || player >= s.player_count())
    throw UsageError("player index " + std::to_string(player) + " out of range");
  const auto& params = s.params;
  const PlayerState& me = s.players[player];
  Rng rng(seed);
  Action a;
  a.kind = kind;
  a.player = static_cast<std::int8_t>(player);
  TokenVector post = me.hand;

  switch (kind) {
    case ActionKind::PickDifferent: {
      SmallVec<int, kMaxSuits> open;
      for (int t = 0; t < params.token_types; ++t)
        if (s.table.suit[t] >= params.pick_different_tokens) open.push_back(t);
      // As many distinct suits as the rules allow; fewer only when fewer
      // stacks qualify.
      int k = std::min<int>(params.pick_different_suits, static_cast<int>(open.size()));
      if (k == 0) return std::nullopt;
      for (int i = 0; i < k; ++i) {
        auto j = i + rng.below(static_cast<std::uint32_t>(open.size() - i));
        std::swap(open[i], open[j]);
        a.suit_mask |= static_cast<std::uint8_t>(1u << open[i]);
        post.suit[open[i]] += params.pick_different_tokens;
      }
      break;
    }
    case ActionKind::PickSame: {
      SmallVec<int, kMaxSuits> open;
      for (int t = 0; t < params.token_types; ++t)
        if (pick_same_ok(s, t)) open.push_back(t);
      if (open.empty()) return std::nullopt;
      a.suit = static_cast<std::int8_t>(open[rng.below(static_cast<std::uint32_t>(open.size()))]);
      post.suit[a.suit] += params.pick_same_tokens;
      break;
    }
    case ActionKind::ReserveTable: {
      if (!can_reserve(s, me)) return std::nullopt;
      SmallVec<Slot, 12> slots;
      for (int d = 0; d < params.decks; ++d)
        for (std::size_t i = 0; i < s.face_up[d].size(); ++i)
          slots.push_back({static_cast<std::int8_t>(d), static_cast<std::int8_t>(i)});
      if (slots.empty()) return std::nullopt;
      Slot pick = slots[rng.below(static_cast<std::uint32_t>(slots.size()))];
      a.deck = pick.deck;
      a.slot = pick.slot;
      a.card = s.face_up[pick.deck][pick.slot];
      post = after_reserve(s, me);
      break;
    }
    case ActionKind::ReserveDeck: {
      if (!can_reserve(s, me)) return std::nullopt;
      SmallVec<int, 3> open;
      for (int d = 0; d < params.decks; ++d)
        if (!s.decks[d].empty()) open.push_back(d);
      if (open.empty()) return std::nullopt;
      a.deck = static_cast<std::int8_t>(open[rng.below(static_cast<std::uint32_t>(open.size()))]);
      post = after_reserve(s, me);
      break;
    }
    case ActionKind::BuyTable: {
      SmallVec<Slot, 12> slots;
      for (int d = 0; d < params.decks; ++d)
        for (std::size_t i = 0; i < s.face_up[d].size(); ++i)
          if (canonical_payment(s.card(s.face_up[d][i]), me))
            slots.push_back({static_cast<std::int8_t>(d), static_cast<std::int8_t>(i)});
      if (slots.empty()) return std::nullopt;
      Slot pick = slots[rng.below(static_cast<std::uint32_t>(slots.size()))];
      a.deck = pick.deck;
      a.slot = pick.slot;
      a.card = s.face_up[pick.deck][pick.slot];
      a.payment = *canonical_payment(s.card(s.face_up[pick.deck][pick.slot]), me);
      return a;
    }
    case ActionKind::BuyReserved: {
      SmallVec<int, 3> open;
      for (std::size_t i = 0; i < me.reserved.size(); ++i)
        if (canonical_payment(s.card(me.reserved[i].card), me)) open.push_back(static_cast<int>(i));
      if (open.empty()) return std::nullopt;
      a.slot = static_cast<std::int8_t>(open[rng.below(static_cast<std::uint32_t>(open.size()))]);
      a.card = me.reserved[a.slot].card;
      a.payment = *canonical_payment(s.card(me.reserved[a.slot].card), me);
      return a;
    }
  }
  if (post.total() > params.max_tokens)
    a.give_back = sample_give_back(post, params.max_tokens, rng);
  return a;
}

bool has_action(ActionKind kind, const GameState& s, int player) {
  const auto& params = s.params;
  const PlayerState& me = s.players[player];
  switch (kind) {
    case ActionKind::PickDifferent:
      if (params.pick_different_suits < 1) return false;
      for (int t = 0; t < params.token_types; ++t)
        if (s.table.suit[t] >= params.pick_different_tokens) return true;
      return false;
    case ActionKind::PickSame:
      for (int t = 0; t < params.token_types; ++t)
        if (pick_same_ok(s, t)) return true;
      return false;
    case ActionKind::ReserveTable:
      if (!can_reserve(s, me)) return false;
      for (const auto& row : s.face_up)
        if (!row.empty()) return true;
      return false;
    case ActionKind::ReserveDeck:
      if (!can_reserve(s, me)) return false;
      for (const auto& deck : s.decks)
        if (!deck.empty()) return true;
      return false;
    case ActionKind::BuyTable:
      for (const auto& row : s.face_up)
        for (auto id : row)
          if (canonical_payment(s.card(id), me)) return true;
      return false;
    case ActionKind::BuyReserved:
      for (const auto& r : me.reserved)
        if (canonical_payment(s.card(r.card), me)) return true;
      return false;
  }
  return false;
}

bool has_any_action(const GameState& s, int player) {
  for (auto kind : kActionKinds)
    if (has_action(kind, s, player)) return true;
  return false;
}

std::optional<Action> try_random_action(const GameState& s, int player, std::uint64_t seed) {
  Rng rng(seed);
  auto order = kActionKinds;
  shuffle(std::span(order), rng);
  for (auto kind : order) {
    if (auto a = generate(kind, s, player, rng())) return a;
  }
  return std::nullopt;
}

Action random_action(const GameState& s, int player, std::uint64_t seed) {
  if (auto a = try_random_action(s, player, seed)) return *a;
  throw StalemateError();
}

}  // namespace spl

#include "spl/core/state.hpp"

#include <string>

#include "spl/core/errors.hpp"

namespace spl {

GameState new_game(const GameParams& params, ContentPtr content, std::uint64_t seed) {
  params.validate();
  if (!content) throw SetupError("no content set");
  if (params.token_types != content->suits)
    throw SetupError("nTT=" + std::to_string(params.token_types) +
                     " is not supported by content with " + std::to_string(content->suits) +
                     " suits (card generation is not available)");
  if (params.decks != content->levels)
    throw SetupError("D=" + std::to_string(params.decks) +
                     " is not supported by content with " + std::to_string(content->levels) +
                     " levels (card generation is not available)");
  if (params.noble_count() > static_cast<int>(content->nobles.size()))
    throw SetupError("content has " + std::to_string(content->nobles.size()) +
                     " nobles, setup needs " + std::to_string(params.noble_count()));
  for (int level = 1; level <= params.decks; ++level) {
    if (content->cards_in_level(level) < params.face_up)
      throw SetupError("level " + std::to_string(level) + " has too few cards to deal");
  }

  GameState s;
  s.params = params;
  s.content = content;
  s.rng = Rng(seed);

  s.decks.resize(params.decks);
  for (std::size_t id = 0; id < content->cards.size(); ++id)
    s.decks[content->cards[id].level - 1].push_back(static_cast<CardId>(id));
  for (auto& deck : s.decks) shuffle(std::span(deck.data(), deck.size()), s.rng);

  SmallVec<NobleId, 10> all_nobles;
  for (std::size_t id = 0; id < content->nobles.size(); ++id)
    all_nobles.push_back(static_cast<NobleId>(id));
  shuffle(std::span(all_nobles.data(), all_nobles.size()), s.rng);
  s.nobles.assign(all_nobles.begin(), all_nobles.begin() + params.noble_count());

  for (int t = 0; t < params.token_types; ++t)
    s.table.suit[t] = static_cast<std::int16_t>(params.tokens_per_suit());
  s.table.joker = static_cast<std::int16_t>(params.jokers);

  s.face_up.resize(params.decks);
  for (int d = 0; d < params.decks; ++d) {
    for (int i = 0; i < params.face_up; ++i) {
      s.face_up[d].push_back(s.decks[d].back());
      s.decks[d].pop_back();
    }
  }
  s.players.resize(params.players);
  return s;
}

int score(const GameState& state, int player) {
  if (player < 0 || player >= state.player_count())
    throw UsageError("player index " + std::to_string(player) + " out of range");
  return state.players[player].prestige;
}

GameState copy_for_player(const GameState& state, int observer, std::uint64_t seed) {
  if (observer < 0 || observer >= state.player_count())
    throw UsageError("observer index " + std::to_string(observer) + " out of range");
  GameState copy = state;
  Rng rng(seed);
  for (int p = 0; p < copy.player_count(); ++p) {
    if (p == observer) continue;
    for (auto& r : copy.players[p].reserved) {
      if (!r.from_deck) continue;
      auto& deck = copy.decks[copy.card(r.card).level - 1];
      // Draw uniformly from the unseen pool: the deck plus the hidden card.
      auto j = rng.below(static_cast<std::uint32_t>(deck.size() + 1));
      if (j < deck.size()) std::swap(r.card, deck[j]);
    }
  }
  for (auto& deck : copy.decks) shuffle(std::span(deck.data(), deck.size()), rng);
  copy.rng = Rng(rng());
  return copy;
}

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  }
  void add(const TokenVector& t) {
    for (auto s : t.suit) add(static_cast<std::uint64_t>(s));
    add(static_cast<std::uint64_t>(t.joker));
  }
  template <typename C>
  void add_all(const C& c) {
    add(c.size());
    for (auto v : c) add(static_cast<std::uint64_t>(v));
  }
};

}  // namespace

std::uint64_t state_hash(const GameState& s) {
  Fnv f;
  for (int v : s.params.as_vector()) f.add(static_cast<std::uint64_t>(v));
  f.add(s.table);
  for (const auto& d : s.decks) f.add_all(d);
  for (const auto& r : s.face_up) f.add_all(r);
  f.add_all(s.nobles);
  for (const auto& p : s.players) {
    f.add(p.hand);
    f.add(p.bonus);
    f.add_all(p.purchased);
    f.add(p.reserved.size());
    for (const auto& r : p.reserved) f.add(r.card * 2u + r.from_deck);
    f.add_all(p.nobles);
    f.add(static_cast<std::uint64_t>(p.prestige));
  }
  f.add(static_cast<std::uint64_t>(s.tick));
  f.add(static_cast<std::uint64_t>(s.current));
  f.add(s.final_round * 2u + s.over);
  f.add(s.rng.state());
  return f.h;
}

std::optional<std::string> check_invariants(const GameState& s) {
  const auto& params = s.params;
  TokenVector sum = s.table;
  for (const auto& p : s.players) sum += p.hand;
  for (int t = 0; t < kMaxSuits; ++t) {
    int expect = t < params.token_types ? params.tokens_per_suit() : 0;
    if (sum.suit[t] != expect)
      return "token conservation broken for suit " + std::to_string(t);
  }
  if (sum.joker != params.jokers) return "joker conservation broken";
  if (s.table.any_negative()) return "negative table tokens";

  std::size_t cards = 0;
  std::vector<int> seen(s.content->cards.size(), 0);
  auto mark = [&](CardId id) {
    ++cards;
    ++seen[id];
  };
  for (const auto& d : s.decks)
    for (auto id : d) mark(id);
  for (const auto& r : s.face_up) {
    if (static_cast<int>(r.size()) > params.face_up) return "too many face-up cards";
    for (auto id : r) mark(id);
  }
  std::size_t nobles = s.nobles.size();
  for (int i = 0; i < s.player_count(); ++i) {
    const auto& p = s.players[i];
    std::string who = "player " + std::to_string(i);
    if (p.hand.any_negative()) return who + " has negative tokens";
    if (p.hand.total() > params.max_tokens) return who + " holds more than maxT tokens";
    if (static_cast<int>(p.reserved.size()) > params.max_reserved)
      return who + " holds more than maxRC reserved cards";
    TokenVector bonus;
    int prestige = 0;
    for (auto id : p.purchased) {
      mark(id);
      ++bonus.suit[s.card(id).bonus];
      prestige += s.card(id).value;
    }
    for (const auto& r : p.reserved) mark(r.card);
    for (auto n : p.nobles) prestige += s.noble(n).value;
    nobles += p.nobles.size();
    if (bonus != p.bonus) return who + " bonus cache is stale";
    if (prestige != p.prestige) return who + " prestige cache is stale";
  }
  if (cards != s.content->cards.size()) return "card conservation broken";
  for (int c : seen)
    if (c != 1) return "a card appears more than once";
  if (static_cast<int>(nobles) != params.noble_count()) return "noble conservation broken";
  return std::nullopt;
}

}  // namespace spl

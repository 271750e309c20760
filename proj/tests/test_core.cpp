#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "spl/core/errors.hpp"
#include "spl/core/params.hpp"
#include "spl/core/rng.hpp"
#include "spl/core/state.hpp"
#include "support.hpp"

using namespace spl;
using spl::test::fresh_game;
using spl::test::random_walk;
using spl::test::recount;

TEST_CASE("rng is deterministic and bounded") {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());
  Rng r(1);
  std::vector<int> hist(6);
  for (int i = 0; i < 60000; ++i) {
    auto x = r.below(6);
    REQUIRE(x < 6);
    ++hist[x];
  }
  for (int h : hist) CHECK(std::abs(h - 10000) < 400);
  for (int i = 0; i < 1000; ++i) {
    double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(mix_seed(1, 2) != mix_seed(2, 1));
  CHECK(mix_seed(1, 2) == mix_seed(1, 2));
}

TEST_CASE("shuffle permutes") {
  std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7};
  Rng r(3);
  shuffle(std::span<int>(v), r);
  std::multiset<int> m(v.begin(), v.end());
  CHECK(m == std::multiset<int>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("token vector arithmetic") {
  TokenVector a, b;
  a.suit[0] = 3;
  a.joker = 1;
  b.suit[0] = 1;
  CHECK(a.total() == 4);
  CHECK(b.within(a));
  CHECK_FALSE(a.within(b));
  CHECK((a - b).suit[0] == 2);
  CHECK((a - b - b - b - b).any_negative());
  CHECK(to_string(a) == "[3,0,0,0,0|j1]");
}

TEST_CASE("game params defaults, validation and JSON") {
  GameParams p;
  auto v = p.as_vector();
  CHECK(v == std::array<int, 13>{4, 5, 5, 3, 4, 1, 10, 3, 15, 3, 1, 2, 4});
  CHECK(kParamSymbols.size() == 13);
  CHECK_NOTHROW(p.validate());

  GameParams bad = p;
  bad.players = 1;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = p;
  bad.prestige_goal = 0;
  CHECK_THROWS_AS(bad.validate(), UsageError);

  nlohmann::json j = p;
  CHECK(j["P"] == 4);
  CHECK(j["minTPS"] == 4);
  auto back = j.get<GameParams>();
  CHECK(back == p);

  auto partial = nlohmann::json{{"P", 2}}.get<GameParams>();
  CHECK(partial.players == 2);
  CHECK(partial.max_tokens == 10);
  CHECK_THROWS_AS((nlohmann::json{{"players", 2}}.get<GameParams>()), UsageError);
}

TEST_CASE("bundled content") {
  auto c = default_content();
  CHECK(c->cards.size() == 90);
  CHECK(c->nobles.size() == 10);
  CHECK(c->suits == 5);
  CHECK(c->levels == 3);
  CHECK(c->cards_in_level(1) == 40);
  CHECK(c->cards_in_level(2) == 30);
  CHECK(c->cards_in_level(3) == 20);
  for (const auto& card : c->cards) {
    CHECK(card.price.joker == 0);
    CHECK(card.bonus < 5);
    CHECK(card.price.total() > 0);
  }
  for (const auto& n : c->nobles) {
    CHECK(n.value == 3);
    CHECK(n.requirement.total() > 0);
  }
}

TEST_CASE("content loader rejects malformed files") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "spl_content_test";
  fs::create_directories(dir);
  {
    std::ofstream(dir / "cards.csv") << "level,bonus,value,cost_suit0\n1,0,0,-1\n";
    std::ofstream(dir / "nobles.csv") << "value,req_suit0\n3,4\n";
  }
  CHECK_THROWS(load_content(dir / "cards.csv", dir / "nobles.csv"));
  {
    std::ofstream(dir / "cards.csv") << "lvl,bonus,value,cost_suit0\n1,0,0,1\n";
  }
  CHECK_THROWS(load_content(dir / "cards.csv", dir / "nobles.csv"));
  CHECK_THROWS(load_content(dir / "missing.csv", dir / "nobles.csv"));
  fs::remove_all(dir);
}

TEST_CASE("new_game setup, four players") {
  auto s = fresh_game(4, 42);
  CHECK(s.nobles.size() == 5);
  // Seven per suit for four players (deviation from P+2, see README).
  for (int t = 0; t < 5; ++t) CHECK(s.table.suit[t] == 7);
  CHECK(s.table.joker == 5);
  int face_up = 0;
  for (const auto& row : s.face_up) face_up += static_cast<int>(row.size());
  CHECK(face_up == 12);
  CHECK(s.tick == 0);
  CHECK(s.current == 0);
  CHECK_FALSE(check_invariants(s));
  CHECK(recount(s).ok());
}

TEST_CASE("new_game setup, two players") {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    auto s = fresh_game(2, seed);
    CHECK(s.nobles.size() == 3);
    for (int t = 0; t < 5; ++t) CHECK(s.table.suit[t] == 4);
    CHECK(s.decks[0].size() == 36);
    CHECK(s.decks[1].size() == 26);
    CHECK(s.decks[2].size() == 16);
  }
}

TEST_CASE("new_game is deterministic in its seed") {
  auto a = fresh_game(4, 5), b = fresh_game(4, 5), c = fresh_game(4, 6);
  CHECK(a == b);
  CHECK(state_hash(a) == state_hash(b));
  CHECK_FALSE(a == c);
}

TEST_CASE("new_game rejects unsupported parameters") {
  GameParams p;
  p.token_types = 6;
  CHECK_THROWS_AS(new_game(p, default_content(), 1), SetupError);
  p = GameParams{};
  p.decks = 2;
  CHECK_THROWS_AS(new_game(p, default_content(), 1), SetupError);
  p = GameParams{};
  p.players = 9;
  p.extra_nobles = 5;  // 14 nobles needed, 10 available
  CHECK_THROWS_AS(new_game(p, default_content(), 1), SetupError);
  p = GameParams{};
  p.face_up = 25;  // level 3 has 20 cards
  CHECK_THROWS_AS(new_game(p, default_content(), 1), SetupError);
}

TEST_CASE("score") {
  auto s = fresh_game();
  for (int i = 0; i < 4; ++i) CHECK(score(s, i) == 0);
  CHECK_THROWS_AS(score(s, 4), UsageError);
  CHECK_THROWS_AS(score(s, -1), UsageError);

  // Cards worth 2 and 3 plus one noble worth 3.
  auto& me = s.players[1];
  const auto& cards = s.content->cards;
  int two = -1, three = -1;
  for (int i = 0; i < static_cast<int>(cards.size()); ++i) {
    if (cards[i].value == 2 && two < 0) two = i;
    if (cards[i].value == 3 && three < 0) three = i;
  }
  REQUIRE(two >= 0);
  REQUIRE(three >= 0);
  me.purchased = {static_cast<CardId>(two), static_cast<CardId>(three)};
  me.nobles = {s.nobles.front()};
  me.prestige = 2 + 3 + s.noble(s.nobles.front()).value;
  CHECK(score(s, 1) == 8);
}

TEST_CASE("acting player's score never decreases") {
  for (std::uint64_t g = 0; g < 1000; ++g) {
    auto s = fresh_game(4, g);
    Rng rng(g + 1000);
    while (!s.over) {
      const int p = s.current;
      const int before = s.players[p].prestige;
      auto a = try_random_action(s, p, rng());
      if (!a) break;
      apply(s, *a);
      REQUIRE(s.players[p].prestige >= before);
    }
  }
}

TEST_CASE("copy_for_player resamples hidden information only") {
  SUBCASE("fresh game: only deck order changes") {
    auto s = fresh_game(4, 11);
    auto c = copy_for_player(s, 0, 77);
    CHECK(c.table == s.table);
    CHECK(c.face_up == s.face_up);
    CHECK(c.nobles == s.nobles);
    CHECK(c.players == s.players);
    bool order_changed = false;
    for (int d = 0; d < 3; ++d) {
      CHECK(std::multiset<int>(c.decks[d].begin(), c.decks[d].end()) ==
            std::multiset<int>(s.decks[d].begin(), s.decks[d].end()));
      order_changed |= c.decks[d] != s.decks[d];
    }
    CHECK(order_changed);
  }

  SUBCASE("own hidden reservation kept, opponents' resampled") {
    int resampled = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto s = fresh_game(4, 3);
      s.players[0].reserved.push_back({s.decks[0].back(), true});
      s.decks[0].pop_back();
      s.players[2].reserved.push_back({s.decks[1].back(), true});
      s.decks[1].pop_back();
      REQUIRE(recount(s).ok());

      auto c = copy_for_player(s, 0, seed);
      CHECK(c.players[0].reserved == s.players[0].reserved);
      CHECK(recount(c).ok());
      CHECK_FALSE(check_invariants(c));
      const CardId theirs = c.players[2].reserved[0].card;
      CHECK(s.card(theirs).level == 2);
      resampled += theirs != s.players[2].reserved[0].card;
      for (int p = 0; p < 4; ++p) {
        CHECK(c.players[p].hand == s.players[p].hand);
        CHECK(c.players[p].purchased == s.players[p].purchased);
      }
      CHECK(c.table == s.table);
    }
    CHECK(resampled > 40);
  }

  SUBCASE("conservation on random mid-game copies") {
    for (std::uint64_t g = 0; g < 200; ++g) {
      auto s = fresh_game(4, g);
      random_walk(s, static_cast<int>(g % 120), g * 3 + 1);
      auto c = copy_for_player(s, static_cast<int>(g % 4), g);
      REQUIRE(recount(c).ok());
      REQUIRE_FALSE(check_invariants(c));
    }
  }
}

TEST_CASE("check_invariants flags broken states") {
  auto s = fresh_game();
  s.table.suit[0] -= 1;
  CHECK(check_invariants(s));
  s = fresh_game();
  s.players[0].prestige = 4;
  CHECK(check_invariants(s));
  s = fresh_game();
  s.decks[0].pop_back();
  CHECK(check_invariants(s));
}

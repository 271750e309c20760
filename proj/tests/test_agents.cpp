#include <doctest.h>

#include <cmath>
#include <map>

#include "spl/agents/basic.hpp"
#include "spl/agents/config.hpp"
#include "spl/agents/factory.hpp"
#include "spl/agents/mcts.hpp"
#include "spl/agents/opponent.hpp"
#include "spl/agents/rolling_horizon.hpp"
#include "spl/core/errors.hpp"
#include "support.hpp"

using namespace spl;
using namespace spl::test;
using nlohmann::json;

namespace {

GameState midgame(std::uint64_t seed, int steps = 30) {
  auto s = fresh_game(4, seed);
  random_walk(s, steps, seed + 1);
  return s;
}

double reserved_count(const GameState& s, int p) {
  return static_cast<double>(s.players[p].reserved.size());
}

double zero_heuristic(const GameState&, int) { return 0; }

}  // namespace

TEST_CASE("random agent") {
  auto s = fresh_game();
  RandomAgent a;
  a.reset(5);
  Budget b(1);
  ForwardModel fm(b);
  const Action x = a.act(s, 0, fm);
  CHECK(b.used() == 1);
  CHECK(is_legal(s, x));

  a.reset(5);
  Budget b2(1);
  ForwardModel fm2(b2);
  CHECK(a.act(s, 0, fm2) == x);

  auto stuck = stalemate_state();
  Budget b3(10);
  ForwardModel fm3(b3);
  CHECK_THROWS_AS(a.act(stuck, 0, fm3), StalemateError);
}

TEST_CASE("one step look ahead") {
  auto s = midgame(3);
  const int me = s.current;

  SUBCASE("spends the budget in sample/apply pairs") {
    Budget b(1000);
    ForwardModel fm(b);
    Rng rng(1);
    int evaluations = 0;
    Heuristic counting = [&](const GameState&, int) {
      ++evaluations;
      return 0.0;
    };
    auto a = one_step_lookahead(s, me, fm, rng, counting);
    REQUIRE(a);
    CHECK(b.used() == 1000);
    CHECK(evaluations - 1 == 500);  // one extra for the base value
  }

  SUBCASE("returns the argmax") {
    Budget b(1000);
    ForwardModel fm(b);
    Rng rng(2);
    auto a = one_step_lookahead(s, me, fm, rng, reserved_count);
    REQUIRE(a);
    CHECK((a->kind == ActionKind::ReserveTable || a->kind == ActionKind::ReserveDeck));
  }

  SUBCASE("a buy beats picks under the prestige heuristic") {
    // Give the player enough to buy any face-up card that awards prestige.
    auto rich = s;
    for (int t = 0; t < 5; ++t) rich.players[me].bonus.suit[t] += 7;  // every card is free
    bool scoring = false;
    for (const auto& row : rich.face_up)
      for (CardId c : row) scoring |= rich.card(c).value > 0;
    REQUIRE(scoring);
    Budget b(1000);
    ForwardModel fm(b);
    Rng rng(3);
    auto a = one_step_lookahead(rich, me, fm, rng, prestige_heuristic);
    REQUIRE(a);
    CHECK(a->kind == ActionKind::BuyTable);
    CHECK(rich.card(static_cast<CardId>(a->card)).value > 0);
  }

  SUBCASE("ties keep the first sample") {
    Budget b(1000);
    ForwardModel fm(b);
    Rng rng(4);
    auto a = one_step_lookahead(s, me, fm, rng, zero_heuristic);
    Rng replay(4);
    REQUIRE(a);
    CHECK(*a == random_action(s, me, replay()));
  }

  SUBCASE("budget 1 still answers") {
    Budget b(1);
    ForwardModel fm(b);
    Rng rng(5);
    auto a = one_step_lookahead(s, me, fm, rng, prestige_heuristic);
    REQUIRE(a);
    CHECK(is_legal(s, *a));
  }
}

TEST_CASE("mutation point distributions") {
  Rng rng(17);
  for (int ms = 0; ms < 3; ++ms) CHECK(mutation_point(ms, 1, 0.8, 0.1, 0.5, rng) == 0);

  constexpr int kDraws = 100000;
  std::vector<int> uniform(5, 0);
  for (int i = 0; i < kDraws; ++i) ++uniform[mutation_point(0, 5, 0.8, 0.1, 0.5, rng)];
  for (int c : uniform) CHECK(std::abs(c / double(kDraws) - 0.2) < 0.01);

  std::vector<int> decay(20, 0);
  for (int i = 0; i < kDraws; ++i) ++decay[mutation_point(1, 20, 0.8, 0.1, 0.5, rng)];
  CHECK(decay[0] / double(kDraws) == doctest::Approx(0.8).epsilon(0.01));
  CHECK(decay[1] / double(kDraws) == doctest::Approx(0.16).epsilon(0.03));

  // Gaussian centred on mu*l = 2 with sigma 0.5: mostly 2, some 1 and 3.
  std::vector<int> gauss(10, 0);
  for (int i = 0; i < kDraws; ++i) {
    const int k = mutation_point(2, 10, 0.8, 0.2, 0.5, rng);
    REQUIRE(k >= 0);
    REQUIRE(k < 10);
    ++gauss[k];
  }
  const double p2 = std::erf(0.5 / (0.5 * std::sqrt(2.0)));  // P(|z| < 1)
  CHECK(gauss[2] / double(kDraws) == doctest::Approx(p2).epsilon(0.02));
  CHECK(std::abs(gauss[1] - gauss[3]) < kDraws / 100);
}

TEST_CASE("BMRH keeps a non-decreasing incumbent") {
  BmrhConfig cfg;
  cfg.l = 4;
  cfg.n = 500;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = midgame(seed);
    BmrhAgent agent(cfg);
    agent.reset(seed);
    Budget b(1000);
    ForwardModel fm(b);
    const auto before = state_hash(s);
    const Action a = agent.act(s, s.current, fm);
    CHECK(state_hash(s) == before);
    CHECK(is_legal(s, a));
    const auto& inc = agent.trace().incumbent;
    REQUIRE_FALSE(inc.empty());
    CHECK(agent.trace().evaluations == static_cast<int>(inc.size()));
    CHECK(agent.trace().evaluations <= cfg.n);
    for (std::size_t i = 1; i < inc.size(); ++i) CHECK(inc[i] >= inc[i - 1]);
  }
}

TEST_CASE("BMRH stops at n evaluations") {
  BmrhConfig cfg;
  cfg.n = 7;
  BmrhAgent agent(cfg);
  agent.reset(1);
  auto s = midgame(2);
  Budget b(100000);
  ForwardModel fm(b);
  agent.act(s, s.current, fm);
  CHECK(agent.trace().evaluations == 7);
  CHECK(b.used() < 100000);
}

TEST_CASE("SRH genomes") {
  SrhConfig cfg;
  cfg.l = 5;
  SrhAgent agent(cfg);
  agent.reset(3);
  auto s = midgame(9);
  const int me = s.current;
  SrhAgent::Genome g{11, 22, 33, 44, 55};

  SUBCASE("decoding is deterministic") {
    Budget b(10000);
    ForwardModel fm(b);
    auto copy = copy_for_player(s, me, 77);
    double v1 = 0, v2 = 0;
    auto a1 = agent.decode(copy, me, g, fm, &v1);
    auto a2 = agent.decode(copy, me, g, fm, &v2);
    CHECK(a1 == a2);
    CHECK(v1 == v2);
    CHECK_FALSE(a1.empty());
  }

  SUBCASE("mr=0 without mutate-once keeps the parent") {
    SrhConfig frozen = cfg;
    frozen.mo = false;
    frozen.mr = 0;
    SrhAgent f(frozen);
    f.reset(1);
    CHECK(f.mutate(g) == g);
  }

  SUBCASE("mutate-once changes exactly one gene") {
    SrhConfig once = cfg;
    once.mo = true;
    SrhAgent m(once);
    m.reset(2);
    for (int i = 0; i < 100; ++i) {
      auto child = m.mutate(g);
      int diff = 0;
      for (std::size_t k = 0; k < g.size(); ++k) diff += child[k] != g[k];
      CHECK(diff == 1);
    }
  }

  SUBCASE("act is legal and leaves the state alone") {
    Budget b(1000);
    ForwardModel fm(b);
    const auto before = state_hash(s);
    CHECK(is_legal(s, agent.act(s, me, fm)));
    CHECK(state_hash(s) == before);
    const auto& inc = agent.trace().incumbent;
    for (std::size_t i = 1; i < inc.size(); ++i) CHECK(inc[i] >= inc[i - 1]);
  }
}

TEST_CASE("ucb value") {
  CHECK(ucb_value(0.5, 4, 100, 1.41, 1e-6) ==
        doctest::Approx(0.5 + 1.41 * std::sqrt(std::log(101.0) / 4)));
  CHECK(ucb_value(0.5, 4, 100, 1.41, 1e-6) == doctest::Approx(2.014).epsilon(1e-3));
  CHECK(ucb_value(0.3, 7, 50, 0.0, 1e-6) == 0.3);
  CHECK(ucb_value(0.0, 0, 9, 1.0, 1e-6) == doctest::Approx(1e3 * std::sqrt(std::log(10.0))));
  CHECK(normalize(3, 1, 5) == 0.5);
  CHECK(normalize(3, 3, 3) == 0.0);
}

TEST_CASE("MCTS tree consistency") {
  for (int d : {1, 2, 5}) {
    for (double ep : {0.0, 0.4, 1.0}) {
      MctsConfig cfg;
      cfg.d = d;
      cfg.ep = ep;
      cfg.ps = 3;
      cfg.c = 1.0;
      MctsAgent agent(cfg);
      agent.reset(4);
      auto s = midgame(5);
      Budget b(1000);
      ForwardModel fm(b);
      const auto before = state_hash(s);
      const Action a = agent.act(s, s.current, fm);
      CHECK(state_hash(s) == before);
      CHECK(is_legal(s, a));
      const auto& tree = agent.tree();
      REQUIRE_FALSE(tree.empty());
      CHECK(tree[0].visits > 0);
      for (const auto& node : tree) {
        int sum = 0;
        for (int c : node.children) {
          sum += tree[c].visits;
          CHECK(tree[c].depth == node.depth + 1);
          CHECK(tree[c].depth <= d);
        }
        CHECK(sum == node.visits - node.own_visits);
      }
    }
  }
}

TEST_CASE("MCTS recommendation") {
  SUBCASE("single legal action") {
    auto s = single_action_state();
    REQUIRE(has_any_action(s, 0));
    for (int rt = 0; rt < 3; ++rt) {
      MctsConfig cfg;
      cfg.rt = rt;
      MctsAgent agent(cfg);
      agent.reset(1);
      Budget b(1000);
      ForwardModel fm(b);
      const Action a = agent.act(s, 0, fm);
      CHECK(a.kind == ActionKind::PickDifferent);
      CHECK(a.suit_mask == 1);
    }
  }

  SUBCASE("rt rules on a fixed tree") {
    std::vector<MctsNode> tree(4);
    tree[0].children = {1, 2, 3};
    tree[1].visits = 10;  tree[1].total = 5;   // 0.5
    tree[2].visits = 1;   tree[2].total = 0.9; // 0.9
    tree[3].visits = 30;  tree[3].total = 21;  // 0.7
    CHECK(recommend(tree, 0) == 2);
    CHECK(recommend(tree, 1) == 3);
    CHECK(recommend(tree, 2) == 3);  // 0.7-0.18 > 0.5-0.32 > 0.9-1
    CHECK(recommend(std::vector<MctsNode>(1), 0) == -1);
  }

  SUBCASE("positive reward scaling does not change max or robust choices") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto s = midgame(seed + 40);
      for (int rt : {0, 1}) {
        MctsConfig cfg;
        cfg.rt = rt;
        cfg.c = 1.0;
        std::vector<Action> picks;
        for (double scale : {1.0, 2.0, 0.25}) {
          MctsAgent agent(cfg, [scale](const GameState& g, int p) {
            return scale * prestige_heuristic(g, p);
          });
          agent.reset(seed);
          Budget b(1000);
          ForwardModel fm(b);
          picks.push_back(agent.act(s, s.current, fm));
        }
        CHECK(picks[0] == picks[1]);
        CHECK(picks[0] == picks[2]);
      }
    }
  }
}

TEST_CASE("opponent models") {
  auto s = midgame(8);
  const int opp = s.current;
  Rng rng(1);

  SUBCASE("om=0 forks nothing") {
    Budget planner(1000);
    OpponentModelConfig m{0, 0.05};
    CHECK_FALSE(opponent_step(s, opp, m, planner, rng, prestige_heuristic));
    CHECK(planner.used() == 0);
    CHECK(planner.lent() == 0);

    auto copy = s;
    const int me = (opp + 3) % 4;
    advance_opponents(copy, me, m, planner, rng, prestige_heuristic);
    CHECK(copy.current == me);
    CHECK(copy.table == s.table);
    for (int p = 0; p < 4; ++p) CHECK(copy.players[p] == s.players[p]);
    CHECK(planner.used() == 0);
  }

  SUBCASE("om=1 costs one unit per action") {
    Budget planner(1000);
    OpponentModelConfig m{1, 0.05};
    auto a = opponent_step(s, opp, m, planner, rng, prestige_heuristic);
    REQUIRE(a);
    CHECK(is_legal(s, *a));
    CHECK(planner.used() == 1);

    auto copy = s;
    Budget p2(1000);
    advance_opponents(copy, (opp + 3) % 4, m, p2, rng, prestige_heuristic);
    CHECK(p2.used() == 3);
  }

  SUBCASE("om=2 stays inside its fork") {
    Budget planner(1000);
    OpponentModelConfig m{2, 0.05};
    auto a = opponent_step(s, opp, m, planner, rng, prestige_heuristic);
    REQUIRE(a);
    CHECK(planner.used() <= 50);
    CHECK(planner.used() >= 49);
    CHECK(planner.lent() == 0);
  }

  SUBCASE("an exhausted planner means a pass") {
    Budget planner(10);
    planner.consume(10);
    OpponentModelConfig m{2, 0.05};
    CHECK_FALSE(opponent_step(s, opp, m, planner, rng, prestige_heuristic));
  }
}

TEST_CASE("every agent respects any budget and the state") {
  const std::vector<json> specs = {
      "RND", "OSLA", "BMRH*", "SRH*", "MCTS*",
      {{"kind", "BMRH"}, {"l", 6}, {"om", 2}, {"omsb", 0.1}, {"mo", false}, {"ms", 2}},
      {{"kind", "SRH"}, {"l", 4}, {"om", 1}, {"mo", true}},
      {{"kind", "MCTS"}, {"d", 6}, {"c", 2.0}, {"ps", 4}, {"om", 2}, {"rt", 2}}};
  Rng rng(123);
  for (const auto& spec : specs) {
    CAPTURE(spec.dump());
    auto agent = make_agent(spec);
    for (int trial = 0; trial < 40; ++trial) {
      auto s = midgame(rng(), static_cast<int>(rng.below(80)));
      if (s.over || !has_any_action(s, s.current)) continue;
      agent->reset(trial);
      const std::int64_t cap = 1 + rng.below(trial % 2 ? 40 : 1500);
      Budget b(cap);
      ForwardModel fm(b);
      const auto before = state_hash(s);
      const Action a = agent->act(s, s.current, fm);
      CHECK(is_legal(s, a));
      CHECK(b.used() <= cap);
      CHECK(b.lent() == 0);
      CHECK(state_hash(s) == before);
    }
  }
}

TEST_CASE("agent configs round-trip through JSON") {
  BmrhConfig b;
  b.l = 7;
  b.dcy = 0.3;
  b.opponents.om = 2;
  json j = b;
  CHECK(j.at("l") == 7);
  CHECK(j.at("om") == 2);
  BmrhConfig b2 = j.get<BmrhConfig>();
  CHECK(b2.l == 7);
  CHECK(b2.dcy == 0.3);
  CHECK(b2.opponents.om == 2);

  MctsConfig m = json{{"d", 10}, {"c", 2.5}, {"ombs", 0.1}}.get<MctsConfig>();
  CHECK(m.d == 10);
  CHECK(m.opponents.omsb == 0.1);

  CHECK_THROWS_AS(json({{"zz", 1}}).get<SrhConfig>(), UsageError);
  CHECK_THROWS_AS(json({{"l", 0}}).get<BmrhConfig>(), UsageError);
  CHECK_THROWS_AS(json({{"dcy", 1.0}}).get<BmrhConfig>(), UsageError);
  CHECK_THROWS_AS(json({{"om", 3}}).get<MctsConfig>(), UsageError);
}

TEST_CASE("agent factory") {
  CHECK(make_agent("RND")->name() == "RND");
  CHECK(make_agent(json{{"kind", "OSLA"}})->name() == "OSLA");
  auto m = make_agent(json{{"kind", "MCTS*"}, {"d", 4}});
  auto* mcts = dynamic_cast<MctsAgent*>(m.get());
  REQUIRE(mcts);
  CHECK(mcts->config().d == 4);
  CHECK(mcts->config().ep == 0.4);
  CHECK(agent_label(json{{"kind", "SRH*"}}) == "SRH*");
  CHECK(agent_label("BMRH") == "BMRH*");  // bare kinds use the tuned defaults
  CHECK(agent_label(json{{"kind", "BMRH"}, {"l", 3}}) == "BMRH");
  CHECK_THROWS_AS(make_agent("GREEDY"), UsageError);
  CHECK_THROWS_AS(make_agent(json{{"l", 2}}), UsageError);
}

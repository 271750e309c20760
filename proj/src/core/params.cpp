#include "spl/core/params.hpp"

#include "spl/core/errors.hpp"
#include "spl/core/tokens.hpp"

namespace spl {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError("invalid game parameter: " + what);
}

}  // namespace

void GameParams::validate() const {
  require(players >= 2, "P must be >= 2");
  require(token_types >= 1 && token_types <= kMaxSuits, "nTT out of range");
  require(jokers >= 0, "nJT must be >= 0");
  require(decks >= 1, "D must be >= 1");
  require(face_up >= 0, "FUC must be >= 0");
  require(extra_nobles >= 0, "EN must be >= 0");
  require(max_tokens >= 0, "maxT must be >= 0");
  require(max_reserved >= 0, "maxRC must be >= 0");
  require(prestige_goal >= 1, "PP must be >= 1");
  require(pick_different_suits >= 0, "nTTPD must be >= 0");
  require(pick_different_tokens >= 1, "nTPD must be >= 1");
  require(pick_same_tokens >= 1, "nTPS must be >= 1");
  require(pick_same_min >= 0, "minTPS must be >= 0");
}

std::array<int, 13> GameParams::as_vector() const noexcept {
  return {players,      token_types,   jokers,        decks,
          face_up,      extra_nobles,  max_tokens,    max_reserved,
          prestige_goal, pick_different_suits, pick_different_tokens,
          pick_same_tokens, pick_same_min};
}

namespace {

std::array<int*, 13> fields(GameParams& p) {
  return {&p.players,      &p.token_types,  &p.jokers,       &p.decks,
          &p.face_up,      &p.extra_nobles, &p.max_tokens,   &p.max_reserved,
          &p.prestige_goal, &p.pick_different_suits, &p.pick_different_tokens,
          &p.pick_same_tokens, &p.pick_same_min};
}

}  // namespace

void to_json(nlohmann::json& j, const GameParams& p) {
  j = nlohmann::json::object();
  auto v = p.as_vector();
  for (std::size_t i = 0; i < v.size(); ++i) j[kParamSymbols[i]] = v[i];
}

void from_json(const nlohmann::json& j, GameParams& p) {
  if (!j.is_object()) throw UsageError("game params must be a JSON object");
  auto f = fields(p);
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (std::size_t i = 0; i < kParamSymbols.size(); ++i) {
      if (it.key() == kParamSymbols[i]) {
        *f[i] = it.value().get<int>();
        known = true;
      }
    }
    if (!known) throw UsageError("unknown game parameter '" + it.key() + "'");
  }
}

}  // namespace spl

#pragma once

#include <string>

#include <json.hpp>

namespace spl {

/// Opponent model used inside simulations: 0 do-nothing, 1 random,
/// 2 one-step look ahead. `omsb` is the fraction of the planner's budget
/// forked for each opponent decision.
struct OpponentModelConfig {
  int om = 0;
  double omsb = 0.05;
  void validate() const;
};

/// Branching-mutation rolling horizon. Defaults are the best grid point.
struct BmrhConfig {
  int l = 2;           // sequence length
  int n = 200;         // max sequences evaluated per decision
  bool usb = true;     // shift buffer
  bool mo = true;      // mutate once
  int ms = 1;          // mutation point: 0 uniform, 1 decay, 2 gaussian
  double dcy = 0.8;
  double mu = 0.1;     // gaussian mean, as a fraction of l
  double sigma = 0.5;  // gaussian std dev, in genes
  OpponentModelConfig opponents;
  void validate() const;
};

/// Seed-sequence rolling horizon.
struct SrhConfig {
  int l = 2;
  int n = 200;
  bool usb = true;
  bool mo = false;
  double mr = 0.9;  // per-gene mutation probability
  OpponentModelConfig opponents;
  void validate() const;
};

/// MCTS with sampled expansion.
struct MctsConfig {
  int d = 2;          // max depth of tree plus rollout, counted from the root
  double c = 0.0;     // UCB exploration constant
  double e = 1e-6;    // UCB epsilon
  double ep = 0.4;    // probability of expanding an already expanded node
  int ps = 1;         // action samples per expansion
  int rt = 0;         // recommendation: 0 max, 1 robust, 2 secure
  OpponentModelConfig opponents;
  void validate() const;
};

// Flat JSON objects keyed by hyper-parameter symbol (l, n, usb, mo, ms, dcy,
// mu, sigma, mr, d, c, e, ep, ps, rt, om, omsb). Missing keys keep their
// defaults; unknown keys throw UsageError.
void to_json(nlohmann::json& j, const BmrhConfig& c);
void from_json(const nlohmann::json& j, BmrhConfig& c);
void to_json(nlohmann::json& j, const SrhConfig& c);
void from_json(const nlohmann::json& j, SrhConfig& c);
void to_json(nlohmann::json& j, const MctsConfig& c);
void from_json(const nlohmann::json& j, MctsConfig& c);

}  // namespace spl

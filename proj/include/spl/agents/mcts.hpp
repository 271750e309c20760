#pragma once

#include <vector>

#include "spl/agents/config.hpp"
#include "spl/agents/heuristic.hpp"
#include "spl/engine/agent.hpp"

namespace spl {

/// mean + c * sqrt(ln(parent_visits + 1) / (child_visits + e)). The mean is
/// expected to be already normalised to [0, 1].
double ucb_value(double normalized_mean, int child_visits, int parent_visits, double c,
                 double e);

/// Min-max normalisation; 0 when the range is empty.
double normalize(double value, double lo, double hi);

struct MctsNode {
  Action action;           // action leading here (unused at the root)
  int parent = -1;
  int depth = 0;           // planner actions from the root
  std::vector<int> children;
  int visits = 0;
  int own_visits = 0;      // iterations that stopped at this node
  double total = 0;
  bool expanded = false;

  double mean() const { return visits ? total / visits : 0.0; }
};

/// Index of the recommended root child under `rt` (0 max mean, 1 most
/// visits, 2 mean - 1/sqrt(visits)); -1 when the root has no children.
int recommend(const std::vector<MctsNode>& tree, int rt);

/// Open-loop MCTS. Unexpanded nodes are always expanded; expanded ones are
/// expanded again with probability ep, otherwise the best UCB child is
/// followed. Expansion draws ps random actions and adds one child per
/// distinct action. Reward is the heuristic change from the root state.
class MctsAgent : public Agent {
 public:
  explicit MctsAgent(MctsConfig config = {}, Heuristic heuristic = prestige_heuristic);
  void reset(std::uint64_t seed) override { rng_ = Rng(seed); }
  Action act(const GameState& state, int player, ForwardModel& fm) override;
  std::string name() const override { return "MCTS"; }

  const MctsConfig& config() const { return config_; }
  /// Tree from the last decision; index 0 is the root.
  const std::vector<MctsNode>& tree() const { return tree_; }

 private:
  int expand(int node, const GameState& state, int me, ForwardModel& fm);
  int select(int node);

  MctsConfig config_;
  Heuristic heuristic_;
  Rng rng_;
  std::vector<MctsNode> tree_;
  double lo_ = 0;
  double hi_ = 0;
};

}  // namespace spl

#include "spl/agents/mcts.hpp"

#include <cmath>
#include <limits>

#include "spl/agents/opponent.hpp"
#include "spl/core/errors.hpp"
#include "spl/rules/rules.hpp"

namespace spl {

double ucb_value(double normalized_mean, int child_visits, int parent_visits, double c,
                 double e) {
  return normalized_mean +
         c * std::sqrt(std::log(parent_visits + 1.0) / (child_visits + e));
}

double normalize(double value, double lo, double hi) {
  return hi > lo ? (value - lo) / (hi - lo) : 0.0;
}

int recommend(const std::vector<MctsNode>& tree, int rt) {
  if (tree.empty()) return -1;
  int best = -1;
  double best_key = 0, best_tie = 0;
  for (int child : tree[0].children) {
    const MctsNode& n = tree[child];
    if (n.visits == 0) continue;
    double key = 0, tie = 0;
    switch (rt) {
      case 0: key = n.mean(); tie = n.visits; break;
      case 1: key = n.visits; tie = n.mean(); break;
      default: key = n.mean() - 1.0 / std::sqrt(static_cast<double>(n.visits)); tie = n.visits;
    }
    if (best < 0 || key > best_key || (key == best_key && tie > best_tie)) {
      best = child;
      best_key = key;
      best_tie = tie;
    }
  }
  if (best < 0 && !tree[0].children.empty()) best = tree[0].children.front();
  return best;
}

MctsAgent::MctsAgent(MctsConfig config, Heuristic heuristic)
    : config_(config), heuristic_(std::move(heuristic)) {
  config_.validate();
}

// Samples ps actions and adds the unseen ones as children. Returns a new
// child when there is one, otherwise the child matching a sample, or -1
// when the player is stuck.
int MctsAgent::expand(int node, const GameState& state, int me, ForwardModel& fm) {
  tree_[node].expanded = true;
  std::vector<int> fresh;
  int seen = -1;
  for (int i = 0; i < config_.ps; ++i) {
    auto a = fm.random_action(state, me, rng_());
    if (!a) return -1;
    int match = -1;
    for (int c : tree_[node].children)
      if (tree_[c].action == *a) match = c;
    if (match >= 0) {
      if (seen < 0) seen = match;
      continue;
    }
    MctsNode child;
    child.action = *a;
    child.parent = node;
    child.depth = tree_[node].depth + 1;
    const int id = static_cast<int>(tree_.size());
    tree_.push_back(std::move(child));
    tree_[node].children.push_back(id);
    fresh.push_back(id);
  }
  if (!fresh.empty()) return fresh[rng_.below(fresh.size())];
  return seen;
}

int MctsAgent::select(int node) {
  const MctsNode& n = tree_[node];
  int best = -1;
  double best_value = -std::numeric_limits<double>::infinity();
  int ties = 0;
  for (int c : n.children) {
    const MctsNode& ch = tree_[c];
    const double v = ucb_value(normalize(ch.mean(), lo_, hi_), ch.visits, n.visits,
                               config_.c, config_.e);
    if (v > best_value) {
      best = c;
      best_value = v;
      ties = 1;
    } else if (v == best_value && rng_.below(++ties) == 0) {
      best = c;
    }
  }
  return best;
}

Action MctsAgent::act(const GameState& state, int player, ForwardModel& fm) {
  tree_.clear();
  tree_.emplace_back();
  lo_ = std::numeric_limits<double>::infinity();
  hi_ = -lo_;
  const double base = heuristic_(state, player);
  Budget& budget = fm.budget();
  const auto& om = config_.opponents;

  bool out_of_budget = false;
  while (!out_of_budget && !budget.exhausted()) {
    GameState s = state;
    std::vector<int> path{0};
    int node = 0;
    try {
      // Selection and expansion.
      bool rollout = false;
      while (!s.over && tree_[node].depth < config_.d) {
        int next;
        if (!tree_[node].expanded || rng_.bernoulli(config_.ep)) {
          next = expand(node, s, player, fm);
          if (next < 0) break;
          rollout = true;
        } else {
          next = select(node);
          if (next < 0 || !is_legal(s, tree_[next].action)) break;
        }
        fm.apply(s, tree_[next].action);
        node = next;
        path.push_back(node);
        advance_opponents(s, player, om, budget, rng_, heuristic_);
        if (rollout) break;
      }
      // Rollout to depth d from the root.
      if (rollout) {
        for (int depth = tree_[node].depth; depth < config_.d && !s.over; ++depth) {
          auto a = fm.random_action(s, player, rng_());
          if (!a) break;
          fm.apply(s, *a);
          advance_opponents(s, player, om, budget, rng_, heuristic_);
        }
      }
    } catch (const BudgetExpired&) {
      out_of_budget = true;
    }
    // Nothing learned if the budget ran out before leaving the root.
    if (out_of_budget && path.size() == 1) break;

    const double r = heuristic_(s, player) - base;
    lo_ = std::min(lo_, r);
    hi_ = std::max(hi_, r);
    ++tree_[path.back()].own_visits;
    for (int id : path) {
      ++tree_[id].visits;
      tree_[id].total += r;
    }
  }

  const int best = recommend(tree_, config_.rt);
  if (best >= 0) return tree_[best].action;
  if (fm.remaining() > 0) {
    auto a = fm.random_action(state, player, rng_());
    if (a) return *a;
    throw StalemateError();
  }
  throw BudgetExpired();
}

}  // namespace spl

#include "spl/agents/rolling_horizon.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "spl/agents/opponent.hpp"
#include "spl/core/errors.hpp"
#include "spl/rules/rules.hpp"

namespace spl {

int mutation_point(int ms, int l, double dcy, double mu, double sigma, Rng& rng) {
  if (l <= 1) return 0;
  switch (ms) {
    case 0:
      return static_cast<int>(rng.below(static_cast<std::uint64_t>(l)));
    case 1: {
      // Branch at each index with probability dcy, otherwise move on.
      int i = 0;
      while (i < l - 1 && !rng.bernoulli(dcy)) ++i;
      return i;
    }
    case 2: {
      std::normal_distribution<double> normal(mu * l, sigma);
      const double x = std::clamp(normal(rng), 0.0, static_cast<double>(l - 1));
      return static_cast<int>(std::lround(x));
    }
    default:
      throw UsageError("ms must be 0, 1 or 2");
  }
}

namespace {

[[noreturn]] void no_action(const ForwardModel& fm) {
  if (fm.remaining() <= 0) throw BudgetExpired();
  throw StalemateError();
}

}  // namespace

// ---------------------------------------------------------------- BMRH

BmrhAgent::BmrhAgent(BmrhConfig config, Heuristic heuristic)
    : config_(config), heuristic_(std::move(heuristic)) {
  config_.validate();
}

void BmrhAgent::reset(std::uint64_t seed) {
  rng_ = Rng(seed);
  buffer_.clear();
}

BmrhAgent::Plan BmrhAgent::roll(const GameState& root, int me, std::span<const Action> keep,
                                ForwardModel& fm, double base) {
  GameState s = root;
  Plan plan;
  for (int i = 0; i < config_.l && !s.over; ++i) {
    std::optional<Action> a;
    if (i < static_cast<int>(keep.size()) && is_legal(s, keep[i]))
      a = keep[i];
    else
      a = fm.random_action(s, me, rng_());
    if (!a) break;  // stuck: evaluate the truncated sequence
    if (i == 0 && !fallback_) fallback_ = a;
    fm.apply(s, *a);
    plan.actions.push_back(*a);
    advance_opponents(s, me, config_.opponents, fm.budget(), rng_, heuristic_);
  }
  plan.value = heuristic_(s, me) - base;
  return plan;
}

Action BmrhAgent::act(const GameState& state, int player, ForwardModel& fm) {
  trace_ = {};
  fallback_.reset();
  const double base = heuristic_(state, player);
  std::optional<Plan> best;
  try {
    std::vector<Action> seed;
    if (config_.usb) seed.swap(buffer_);
    best = roll(state, player, seed, fm, base);
    trace_.evaluations = 1;
    trace_.incumbent.push_back(best->value);

    while (trace_.evaluations < config_.n && !fm.budget().exhausted()) {
      const int len = static_cast<int>(best->actions.size());
      int point = mutation_point(config_.ms, std::max(len, 1), config_.dcy, config_.mu,
                                 config_.sigma, rng_);
      if (!config_.mo) {
        while (rng_.bernoulli(0.5))
          point = std::min(point, mutation_point(config_.ms, std::max(len, 1), config_.dcy,
                                                 config_.mu, config_.sigma, rng_));
      }
      std::span<const Action> keep(best->actions.data(), static_cast<std::size_t>(point));
      Plan child = roll(state, player, keep, fm, base);
      ++trace_.evaluations;
      if (!child.actions.empty() && child.value >= best->value) best = std::move(child);
      trace_.incumbent.push_back(best->value);
    }
  } catch (const BudgetExpired&) {
    // The candidate in flight is dropped.
  }
  buffer_.clear();
  if (!best || best->actions.empty()) {
    if (fallback_) return *fallback_;
    if (fm.remaining() > 0) {
      auto a = fm.random_action(state, player, rng_());
      if (a) return *a;
    }
    no_action(fm);
  }
  if (config_.usb) buffer_.assign(best->actions.begin() + 1, best->actions.end());
  return best->actions.front();
}

// ----------------------------------------------------------------- SRH

SrhAgent::SrhAgent(SrhConfig config, Heuristic heuristic)
    : config_(config), heuristic_(std::move(heuristic)) {
  config_.validate();
}

void SrhAgent::reset(std::uint64_t seed) {
  rng_ = Rng(seed);
  buffer_.clear();
}

SrhAgent::Genome SrhAgent::mutate(const Genome& parent) {
  Genome child = parent;
  if (child.empty()) return child;
  if (config_.mo) {
    child[rng_.below(child.size())] = rng_();
  } else {
    for (auto& gene : child)
      if (rng_.bernoulli(config_.mr)) gene = rng_();
  }
  return child;
}

std::vector<Action> SrhAgent::decode(const GameState& root, int me, const Genome& genome,
                                     ForwardModel& fm, double* value) {
  GameState s = root;
  std::vector<Action> actions;
  for (std::uint64_t gene : genome) {
    if (s.over) break;
    auto a = fm.random_action(s, me, gene);
    if (!a) break;
    if (actions.empty() && !fallback_) fallback_ = a;
    fm.apply(s, *a);
    actions.push_back(*a);
    advance_opponents(s, me, config_.opponents, fm.budget(), rng_, heuristic_);
  }
  if (value) *value = heuristic_(s, me) - heuristic_(root, me);
  return actions;
}

Action SrhAgent::act(const GameState& state, int player, ForwardModel& fm) {
  trace_ = {};
  Genome genome;
  if (config_.usb && !buffer_.empty()) genome.assign(buffer_.begin() + 1, buffer_.end());
  while (static_cast<int>(genome.size()) < config_.l) genome.push_back(rng_());
  buffer_.clear();
  fallback_.reset();

  if (config_.n == 0) {
    auto a = fm.random_action(state, player, genome.front());
    if (!a) no_action(fm);
    return *a;
  }

  std::optional<Action> first;
  double best_value = 0;
  Genome best;
  try {
    double v = 0;
    auto actions = decode(state, player, genome, fm, &v);
    trace_.evaluations = 1;
    if (!actions.empty()) {
      first = actions.front();
      best = genome;
      best_value = v;
    }
    trace_.incumbent.push_back(best_value);
    while (trace_.evaluations < config_.n && !fm.budget().exhausted()) {
      Genome child = mutate(best.empty() ? genome : best);
      auto child_actions = decode(state, player, child, fm, &v);
      ++trace_.evaluations;
      if (!child_actions.empty() && (!first || v >= best_value)) {
        first = child_actions.front();
        best = std::move(child);
        best_value = v;
      }
      trace_.incumbent.push_back(best_value);
    }
  } catch (const BudgetExpired&) {
  }
  if (!first) {
    if (fallback_) return *fallback_;
    if (fm.remaining() > 0) {
      auto a = fm.random_action(state, player, rng_());
      if (a) return *a;
    }
    no_action(fm);
  }
  if (config_.usb) buffer_ = best;
  return *first;
}

}  // namespace spl

#pragma once

#include <cstdint>
#include <vector>

#include "spl/agents/config.hpp"
#include "spl/agents/heuristic.hpp"
#include "spl/engine/agent.hpp"

namespace spl {

/// Branch point in [0, l-1].
///   ms=0 uniform;
///   ms=1 P(i) = dcy (1-dcy)^i for i < l-1, remaining mass on l-1;
///   ms=2 round(clamp(N(mu*l, sigma), 0, l-1)).
int mutation_point(int ms, int l, double dcy, double mu, double sigma, Rng& rng);

/// Per-decision diagnostics, overwritten by each act().
struct SearchTrace {
  int evaluations = 0;
  std::vector<double> incumbent;  // best value after each evaluation
};

/// Rolling horizon agent evolving explicit action sequences with a (1+1)
/// scheme. A child keeps the incumbent's actions before a sampled branch
/// point, re-rolls the state through them, then samples fresh actions from
/// the branch point to the horizon.
class BmrhAgent : public Agent {
 public:
  explicit BmrhAgent(BmrhConfig config = {}, Heuristic heuristic = prestige_heuristic);
  void reset(std::uint64_t seed) override;
  Action act(const GameState& state, int player, ForwardModel& fm) override;
  std::string name() const override { return "BMRH"; }

  const BmrhConfig& config() const { return config_; }
  const SearchTrace& trace() const { return trace_; }

 private:
  struct Plan {
    std::vector<Action> actions;
    double value = 0;
  };
  Plan roll(const GameState& root, int me, std::span<const Action> keep, ForwardModel& fm,
            double base);

  BmrhConfig config_;
  Heuristic heuristic_;
  Rng rng_;
  std::vector<Action> buffer_;
  std::optional<Action> fallback_;  // first root action sampled this decision
  SearchTrace trace_;
};

/// Rolling horizon agent evolving vectors of generator seeds; a genome is
/// decoded by feeding each seed to random_action on the rolled state.
class SrhAgent : public Agent {
 public:
  explicit SrhAgent(SrhConfig config = {}, Heuristic heuristic = prestige_heuristic);
  void reset(std::uint64_t seed) override;
  Action act(const GameState& state, int player, ForwardModel& fm) override;
  std::string name() const override { return "SRH"; }

  const SrhConfig& config() const { return config_; }
  const SearchTrace& trace() const { return trace_; }

  using Genome = std::vector<std::uint64_t>;

  /// Child genome: mo replaces exactly one gene, otherwise each gene is
  /// replaced with probability mr.
  Genome mutate(const Genome& parent);

  /// Actions decoded from `genome` on a copy of `root`, with opponents
  /// played between them. Exposed for determinism checks.
  std::vector<Action> decode(const GameState& root, int me, const Genome& genome,
                             ForwardModel& fm, double* value = nullptr);

 private:
  SrhConfig config_;
  Heuristic heuristic_;
  Rng rng_;
  Genome buffer_;
  std::optional<Action> fallback_;
  SearchTrace trace_;
};

}  // namespace spl

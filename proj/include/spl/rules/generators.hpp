#pragma once

#include <cstdint>
#include <optional>

#include "spl/core/state.hpp"
#include "spl/rules/action.hpp"

namespace spl {

/// Random action generator for one kind: a uniformly sampled legal action,
/// deterministic in `seed`, or nullopt iff no legal action of that kind
/// exists. Give-back tokens are sampled one at a time from the post-action
/// hand when it overflows maxT.
std::optional<Action> generate(ActionKind kind, const GameState& state, int player,
                               std::uint64_t seed);

/// Exact existence test matching generate(kind, ...) != nullopt.
bool has_action(ActionKind kind, const GameState& state, int player);

/// True if any of the six kinds has a legal action.
bool has_any_action(const GameState& state, int player);

/// Tries the six generators in a seeded random order and returns the first
/// action found, or nullopt when none exists.
std::optional<Action> try_random_action(const GameState& state, int player,
                                        std::uint64_t seed);

/// As try_random_action, but throws StalemateError when no action exists.
Action random_action(const GameState& state, int player, std::uint64_t seed);

}  // namespace spl

#pragma once

#include <stdexcept>
#include <string>

namespace spl {

/// Parameters or content that cannot produce a playable game.
class SetupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An action that breaks a game rule. The message names the rule.
class RuleViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller error: bad player index, bad configuration value, and similar.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No action generator can produce an action for the player to move.
class StalemateError : public std::runtime_error {
 public:
  StalemateError() : std::runtime_error("stalemate: no legal action available") {}
};

/// A forward-model call was attempted with no budget left.
class BudgetExpired : public std::runtime_error {
 public:
  BudgetExpired() : std::runtime_error("forward model budget expired") {}
};

}  // namespace spl

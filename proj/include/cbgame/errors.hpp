#pragma once

#include <stdexcept>
#include <string>

namespace cbgame {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad or degenerate arguments (precondition violations).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but beyond what the implementation supports
/// (pattern too large, board too large for exact search, ...).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Unknown strategy names, bad parameters, infeasible strategy budgets.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A construction failed its own certification and was not returned.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// An invariant the code relies on did not hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

enum class Rule {
  EdgeOutOfRange,
  SelfLoop,
  AlreadyClaimed,
  WrongTurn,
  CreatesForbidden,
  GameOver,
};

inline const char* rule_name(Rule rule) noexcept;

/// A move broke one of the game rules.
class RuleViolation : public Error {
 public:
  RuleViolation(Rule rule, const std::string& detail)
      : Error(std::string(rule_name(rule)) + ": " + detail), rule_(rule) {}
  Rule rule() const noexcept { return rule_; }

 private:
  Rule rule_;
};

/// A strategy produced an illegal move or passed while it had moves.
class Forfeit : public Error {
 public:
  Forfeit(std::string strategy, const std::string& detail)
      : Error("strategy '" + strategy + "' forfeits: " + detail),
        strategy_(std::move(strategy)) {}
  const std::string& strategy() const noexcept { return strategy_; }

 private:
  std::string strategy_;
};

inline const char* rule_name(Rule rule) noexcept {
  switch (rule) {
    case Rule::EdgeOutOfRange: return "edge-out-of-range";
    case Rule::SelfLoop: return "self-loop";
    case Rule::AlreadyClaimed: return "already-claimed";
    case Rule::WrongTurn: return "wrong-turn";
    case Rule::CreatesForbidden: return "creates-forbidden";
    case Rule::GameOver: return "game-over";
  }
  return "unknown-rule";
}

}  // namespace cbgame

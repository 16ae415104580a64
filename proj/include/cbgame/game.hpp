#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cbgame/counting.hpp"
#include "cbgame/graph.hpp"
#include "cbgame/pattern.hpp"
#include "cbgame/rng.hpp"

namespace cbgame {

enum class Player { Constructor, Blocker };

inline char player_code(Player p) { return p == Player::Constructor ? 'C' : 'B'; }
inline Player other(Player p) {
  return p == Player::Constructor ? Player::Blocker : Player::Constructor;
}

struct Move {
  Player player = Player::Constructor;
  Edge edge;
  std::size_t round = 0;  // from 1; a Blocker reply shares its round with the move it answers
  std::string tag;

  bool operator==(const Move&) const = default;
};

/// Why a finished game stopped.
enum class EndReason {
  None,
  BoardFull,          // every pair of K_n claimed
  ConstructorFrozen,  // no unclaimed pair is legal for Constructor
  PlanComplete,       // Constructor's strategy declared its plan finished
};

const char* end_reason_name(EndReason r);

/// A position of the game on K_n. Constructor moves first and must keep her
/// graph free of the forbidden pattern F; Blocker may claim any unclaimed pair.
class GameState {
 public:
  GameState(std::size_t n, PatternGraph forbidden, std::uint64_t seed = 0);

  std::size_t n() const noexcept { return n_; }
  const PatternGraph& forbidden() const noexcept { return forbidden_; }
  const SimpleGraph& constructor_graph() const noexcept { return c_; }
  const SimpleGraph& blocker_graph() const noexcept { return b_; }
  Player to_move() const noexcept { return turn_; }
  const std::vector<Move>& history() const noexcept { return history_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Round number the next move will carry.
  std::size_t next_round() const noexcept;

  bool is_claimed(Edge e) const { return c_.has_edge(e) || b_.has_edge(e); }
  std::uint64_t unclaimed_count() const noexcept { return pair_count(n_) - c_.size() - b_.size(); }

  /// Unclaimed and keeps Constructor's graph F-free.
  bool constructor_may_claim(Edge e) const;

  /// Legal for the side to move.
  bool is_legal(Edge e) const;

  /// Full scan of K_n; intended for small boards and tests.
  std::vector<Edge> legal_moves() const;

  /// All pairs claimed, or no unclaimed pair is Constructor-legal. Legality
  /// only ever shrinks, so a cursor over the lexicographic pair order makes
  /// repeated calls cheap.
  bool is_terminal() const;

  /// Reason the position is terminal, or None.
  EndReason terminal_reason() const;

  /// Value-semantics move application; validates every rule.
  GameState apply(const Move& move) const;

  /// In-place move for the side to move. Throws RuleViolation.
  void play(Edge e, std::string tag = {});

 private:
  void check(Player who, Edge e) const;

  std::size_t n_;
  PatternGraph forbidden_;
  SimpleGraph c_;
  SimpleGraph b_;
  Player turn_ = Player::Constructor;
  std::vector<Move> history_;
  std::uint64_t seed_;
  mutable std::uint64_t cursor_ = 0;
};

CopyCount score(const GameState& state, const PatternGraph& h);

// ------------------------------------------------------------ strategies

struct Choice {
  Edge edge;
  std::string tag;
};
struct Pass {};
/// Constructor only: the strategy's plan is finished; the game ends with
/// the current score (which can only grow under further play).
struct PlanComplete {
  std::string note;
};
using Decision = std::variant<Choice, Pass, PlanComplete>;

/// A decision policy for one side. One instance serves one game at a time;
/// clone() gives an independent copy for parallel runs. All randomness must
/// come from the generator handed in by the game.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  /// Called once before the first move of a game.
  virtual void reset(const GameState& initial, Rng& rng) {
    (void)initial;
    (void)rng;
  }
  virtual Decision choose(const GameState& state, Rng& rng) = 0;
  virtual std::unique_ptr<Strategy> clone() const = 0;
};

struct GameHeader {
  std::size_t n = 0;
  std::string forbidden;  // pattern specs
  std::string target;
  std::uint64_t seed = 0;
  std::string constructor;
  std::string blocker;

  bool operator==(const GameHeader&) const = default;
};

struct GameResult {
  GameHeader header;
  CopyCount score;
  std::size_t rounds = 0;
  EndReason reason = EndReason::None;
  GameState final_state;
  double millis = 0;

  const std::vector<Move>& moves() const { return final_state.history(); }
};

struct RunOptions {
  /// Called after every move; may be empty.
  std::function<void(const GameState&)> observer;
};

/// Plays Constructor first until the position is terminal or Constructor
/// declares its plan complete. Throws Forfeit when a strategy returns an
/// illegal move or passes while it has one.
GameResult run_game(std::size_t n, const PatternGraph& forbidden, const PatternGraph& target,
                    Strategy& constructor, Strategy& blocker, std::uint64_t seed,
                    const RunOptions& options = {});

}  // namespace cbgame

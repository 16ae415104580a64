#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cbgame/canonical.hpp"
#include "cbgame/game.hpp"
#include "cbgame/pattern.hpp"

namespace cbgame {

inline constexpr std::size_t kMaxSolverOrder = 8;

struct SolveOptions {
  std::uint64_t budget = 0;  // node expansions; 0 = unlimited
  unsigned threads = 1;
};

/// Minimax value of the score with Constructor maximizing and moving first.
/// When the budget runs out only proven bounds are reported.
struct SolveResult {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool exact = false;
  std::uint64_t nodes = 0;
  std::uint64_t stored = 0;  // transposition entries

  std::int64_t value() const { return lower; }
};

SolveResult exact_game_value(std::size_t n, const PatternGraph& h, const PatternGraph& f,
                             const SolveOptions& options = {});

/// Position on K_n (n <= 8) as pair masks indexed by edge_index.
struct BoardPosition {
  std::uint32_t constructor = 0;
  std::uint32_t blocker = 0;
  Player to_move = Player::Constructor;
};

/// Key of a position up to relabeling. Pairs are colored Constructor /
/// still available to Constructor / dead (Blocker-held or forbidden), which
/// is all the future score depends on.
struct PositionKey {
  std::uint64_t key = 0;
  std::vector<std::uint8_t> label;
};

struct PolicyObjective {
  std::uint64_t min_score = 1;
  /// Blocker may also skip a turn. Models boards embedded in a larger game
  /// where Blocker can play elsewhere.
  bool blocker_may_pass = false;
};

/// Constructor policy on a small board: canonical key of each reachable
/// Constructor-to-move position -> move in canonical labels.
struct BoardModel;

class PolicyTable {
 public:
  PolicyTable() = default;
  PolicyTable(std::size_t n, PatternGraph h, PatternGraph f, PolicyObjective objective);

  std::size_t n() const noexcept { return n_; }
  const PatternGraph& target() const { return *h_; }
  const PatternGraph& forbidden() const { return *f_; }
  const PolicyObjective& objective() const noexcept { return objective_; }
  std::string guarantee() const;

  std::size_t size() const noexcept { return moves_.size(); }
  void insert(std::uint64_t key, Edge canonical_move) { moves_[key] = canonical_move; }

  /// Move for the given position (labels 0..n-1), or nullopt on a miss.
  std::optional<Edge> lookup(const SimpleGraph& constructor, const SimpleGraph& blocker) const;

  /// "# ..." header lines, then one "keyhex u v" line per entry.
  void write(std::ostream& os) const;
  static PolicyTable read(std::istream& is);

  const std::map<std::uint64_t, Edge>& entries() const noexcept { return moves_; }

 private:
  friend struct PolicyResult derive_policy(std::size_t, const PatternGraph&, const PatternGraph&,
                                           const PolicyObjective&);
  std::size_t n_ = 0;
  std::optional<PatternGraph> h_;
  std::optional<PatternGraph> f_;
  PolicyObjective objective_;
  std::map<std::uint64_t, Edge> moves_;
  std::shared_ptr<const BoardModel> board_;
};

struct PolicyResult {
  bool achieved = false;
  PolicyTable table;
  std::uint64_t positions = 0;  // distinct positions decided
};

/// AND-OR search for a Constructor policy that guarantees the objective
/// against every Blocker reply. A false `achieved` is a proof that no such
/// policy exists.
PolicyResult derive_policy(std::size_t n, const PatternGraph& h, const PatternGraph& f,
                           const PolicyObjective& objective);

struct CertificateReport {
  bool ok = false;
  std::uint64_t lines = 0;      // complete reply sequences checked
  std::uint64_t min_score = 0;  // smallest score reached at a leaf
  std::string failure;
};

/// Replays the policy against every Blocker reply sequence (and passes when
/// allowed) using the plain graph kernels, checking legality, coverage and
/// the score objective at every leaf.
CertificateReport check_policy(const PolicyTable& policy);

/// Maximum number of copies of h over n-vertex f-free graphs, by exhaustive
/// generation of f-free graphs up to isomorphism.
std::uint64_t brute_force_ex(std::size_t n, const PatternGraph& h, const PatternGraph& f);

/// Canonical key of a game position (n <= 8).
PositionKey position_key(std::size_t n, const PatternGraph& f, const SimpleGraph& constructor,
                         const SimpleGraph& blocker, Player to_move);

}  // namespace cbgame

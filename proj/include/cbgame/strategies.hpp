#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cbgame/game.hpp"
#include "cbgame/numbertheory.hpp"
#include "cbgame/solver.hpp"

namespace cbgame {

// ------------------------------------------------------------ JumbleG

/// Pairs a JumbleG Maker plays on: all pairs of `left` (whole board) or the
/// pairs between `left` and `right` (bipartite frame).
struct JumbleFrame {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  bool bipartite = false;

  static JumbleFrame whole(std::size_t n);
  static JumbleFrame between(std::vector<Vertex> a, std::vector<Vertex> b);
};

/// Degree/codegree balancing move for Maker inside `frame`: take a vertex of
/// smallest Maker degree that still has unclaimed frame pairs, then the
/// partner (among up to 16 sampled) with smallest Maker degree and smallest
/// Maker codegree. nullopt when the frame has no unclaimed pair.
std::optional<Edge> jumbleg_maker_move(const JumbleFrame& frame, const SimpleGraph& maker,
                                       const SimpleGraph& breaker, Rng& rng);

/// Maker-Breaker play on the frame until it is full: heuristic Maker against a
/// uniformly random Breaker. Returns Maker's graph.
SimpleGraph simulate_jumbleg(std::size_t n, const JumbleFrame& frame, std::uint64_t seed,
                             bool maker_first = true);

/// 2 * parts * (ln n / n)^(1/3).
double jumbleg_epsilon(std::size_t n, std::size_t parts);

/// Seeded-random equipartition into `parts` parts (sizes differ by <= 1).
std::vector<std::vector<Vertex>> random_equipartition(std::size_t n, std::size_t parts, Rng& rng);

// ------------------------------------------------------------ Constructors

/// Plays only between parts of a fixed equipartition into s-1 parts, one
/// JumbleG game per pair of parts. Needs chi(F) >= s.
std::unique_ptr<Strategy> partite_jumbleg_constructor(std::size_t s);

/// Plays only between cyclically consecutive parts of a (2k+1)-partition.
std::unique_ptr<Strategy> blowup_cycle_constructor(std::size_t k);

/// Stars, then an embedded C_{<=2k}-free bipartite graph, then triangles on
/// good pairs. F must be C_{2k+1}.
std::unique_ptr<Strategy> three_phase_constructor(std::size_t k);

/// Builds a subgraph of the half blow-up of C_{2l+1} on new vertices.
std::unique_ptr<Strategy> half_blowup_constructor(std::size_t l, std::size_t k);

/// Hyperedge scheduler over K_5 boards of a girth-5 hypergraph. Each board is
/// played with `policy` (a pass-tolerant triangle policy on 5 vertices). The
/// hypergraph is built at reset from a greedy k-fold Sidon set modulo n/5.
std::unique_ptr<Strategy> hypergraph_constructor(std::size_t k = 12);

/// Same, with an explicit hypergraph and policy. Vertex (j, y) is board
/// vertex j * h.n + y.
std::unique_ptr<Strategy> hypergraph_constructor(Hypergraph5 h, PolicyTable policy);

/// Uniform over Constructor-legal (or, for Blocker, unclaimed) pairs.
std::unique_ptr<Strategy> random_strategy();

// ------------------------------------------------------------ Blockers

/// Claims the pair completing the most near-copies of H in Constructor's
/// graph; random among ties; random when there is no threat.
std::unique_ptr<Strategy> greedy_blocker(const PatternGraph& h);

/// JumbleG Maker over the whole board.
std::unique_ptr<Strategy> jumbleg_blocker();

/// Adversarial mix: pairs at Constructor's last endpoints, greedy threats,
/// and random pairs.
std::unique_ptr<Strategy> fuzz_blocker(const PatternGraph& h);

// ------------------------------------------------------------ phase audit

/// Three-phase bookkeeping recovered from move tags.
struct ThreePhaseAudit {
  std::size_t phase1_rounds = 0;
  std::size_t phase2_rounds = 0;
  std::size_t phase3_rounds = 0;
  std::size_t good_at_phase3 = 0;   // good pairs when Phase III starts
  std::uint64_t triangles = 0;      // in the final Constructor graph
  bool phase3_edges_close_triangles = true;
  bool stars_disjoint = true;
};

ThreePhaseAudit audit_three_phase(std::size_t n, const std::vector<Move>& moves);

/// Good pair xy: Constructor's Phase II edge, some leaf a of x with ay
/// unclaimed, and no Constructor edge from the leaves of x to y.
bool is_good_edge(const GameState& state, const std::array<Vertex, 2>& leaves, Vertex x, Vertex y,
                  bool claimed_in_phase2);

// ------------------------------------------------------------ hyperedges

enum class HyperedgeStatus { Untouched, Winning, Won, Lost };

const char* status_name(HyperedgeStatus s);

/// Status of one K_5 board given by its five board vertices.
HyperedgeStatus classify_hyperedge(const GameState& state, const std::array<Vertex, 5>& e);

std::array<Vertex, 5> hyperedge_vertices(const Hypergraph5& h, std::size_t e);

/// Pass-tolerant policy for at least one triangle on K_5 with C4-free play.
const PolicyTable& triangle_policy_k5();

// ------------------------------------------------------------ registry

/// Names: "partite-jumbleg:s=4", "blowup-cycle:k=2", "three-phase:k=2",
/// "half-blowup:l=2,k=3", "hypergraph[:k=12]", "random".
std::unique_ptr<Strategy> make_constructor(const std::string& name);

/// Names: "random", "greedy", "jumbleg-blocker", "fuzz".
std::unique_ptr<Strategy> make_blocker(const std::string& name, const PatternGraph& h);

}  // namespace cbgame

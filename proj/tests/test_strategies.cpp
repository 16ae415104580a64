#include <gtest/gtest.h>

#include <map>

#include "cbgame/analysis.hpp"
#include "cbgame/counting.hpp"
#include "cbgame/errors.hpp"
#include "cbgame/strategies.hpp"

using namespace cbgame;

namespace {

std::uint64_t triangles(const SimpleGraph& g) {
  return count_copies(g, PatternGraph::clique(3)).value;
}

}  // namespace

TEST(Registry, BuildsEveryName) {
  for (const char* c : {"partite-jumbleg:s=4", "blowup-cycle", "blowup-cycle:k=3", "three-phase",
                        "half-blowup:l=2,k=3", "hypergraph", "hypergraph:k=12", "random"})
    EXPECT_NO_THROW(make_constructor(c)) << c;
  for (const char* b : {"random", "greedy", "jumbleg-blocker", "fuzz"})
    EXPECT_NO_THROW(make_blocker(b, PatternGraph::clique(3))) << b;
}

TEST(Registry, RejectsBadNames) {
  EXPECT_THROW(make_constructor("nope"), ConfigError);
  EXPECT_THROW(make_constructor("partite-jumbleg"), ConfigError);
  EXPECT_THROW(make_constructor("partite-jumbleg:s=2"), ConfigError);
  EXPECT_THROW(make_constructor("three-phase:k=x"), ConfigError);
  EXPECT_THROW(make_constructor("three-phase:j=2"), ConfigError);
  EXPECT_THROW(make_constructor("three-phase:k=2,k=3"), ConfigError);
  EXPECT_THROW(make_constructor("half-blowup:l=3,k=3"), ConfigError);
  EXPECT_THROW(make_blocker("greedy:x=1", PatternGraph::clique(3)), ConfigError);
  EXPECT_THROW(make_blocker("smart", PatternGraph::clique(3)), ConfigError);
}

TEST(Registry, WrongForbiddenPatternIsConfigError) {
  auto b = random_strategy();
  auto tp = three_phase_constructor(2);
  EXPECT_THROW(run_game(40, PatternGraph::cycle(7), PatternGraph::clique(3), *tp, *b, 1),
               ConfigError);
  auto hg = hypergraph_constructor();
  EXPECT_THROW(run_game(60, PatternGraph::cycle(4), PatternGraph::clique(3), *hg, *b, 1),
               ConfigError);
  auto bc = blowup_cycle_constructor(2);
  EXPECT_THROW(run_game(30, PatternGraph::clique(4), PatternGraph::cycle(5), *bc, *b, 1),
               ConfigError);
  auto pj = partite_jumbleg_constructor(4);
  EXPECT_THROW(run_game(30, PatternGraph::cycle(5), PatternGraph::clique(3), *pj, *b, 1),
               ConfigError);
}

TEST(RandomStrategy, FirstMoveCoversK4) {
  auto c = random_strategy();
  std::map<std::uint64_t, int> seen;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    GameState s(4, PatternGraph::clique(3));
    Rng rng(seed);
    c->reset(s, rng);
    const auto d = c->choose(s, rng);
    ASSERT_TRUE(std::holds_alternative<Choice>(d));
    ++seen[edge_index(4, std::get<Choice>(d).edge)];
  }
  EXPECT_EQ(seen.size(), 6u);
  for (const auto& [idx, hits] : seen) EXPECT_GT(hits, 60) << idx;
}

TEST(GreedyBlocker, KillsTheOpenTriangle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GameState s(7, PatternGraph::cycle(5));
    s.play(Edge(0, 1));
    s.play(Edge(4, 5));
    s.play(Edge(1, 2));
    auto g = greedy_blocker(PatternGraph::cycle(3));
    Rng rng(seed);
    g->reset(s, rng);
    const auto d = g->choose(s, rng);
    ASSERT_TRUE(std::holds_alternative<Choice>(d));
    EXPECT_EQ(std::get<Choice>(d).edge, Edge(0, 2));
  }
}

TEST(GreedyBlocker, KillsOpenC4) {
  GameState s(8, PatternGraph::cycle(5));
  s.play(Edge(0, 1));
  s.play(Edge(5, 6));
  s.play(Edge(1, 2));
  s.play(Edge(6, 7));
  s.play(Edge(2, 3));
  auto g = greedy_blocker(PatternGraph::cycle(4));
  Rng rng(1);
  g->reset(s, rng);
  const auto d = g->choose(s, rng);
  ASSERT_TRUE(std::holds_alternative<Choice>(d));
  EXPECT_EQ(std::get<Choice>(d).edge, Edge(0, 3));
}

TEST(GoodEdge, Definition) {
  GameState s(8, PatternGraph::cycle(5));
  const std::array<Vertex, 2> leaves{1, 2};
  // Constructor: star 0-1, 0-2 and the pair 0-5. Blocker elsewhere.
  s.play(Edge(0, 1));
  s.play(Edge(6, 7));
  s.play(Edge(0, 2));
  s.play(Edge(3, 4));
  s.play(Edge(0, 5));
  EXPECT_TRUE(is_good_edge(s, leaves, 0, 5, true));
  EXPECT_FALSE(is_good_edge(s, leaves, 0, 5, false));
  EXPECT_FALSE(is_good_edge(s, leaves, 0, 6, true));
  s.play(Edge(1, 5));  // Blocker takes one leaf edge
  EXPECT_TRUE(is_good_edge(s, leaves, 0, 5, true));
  s.play(Edge(3, 6));
  s.play(Edge(2, 5));  // Blocker takes the other: bad
  EXPECT_FALSE(is_good_edge(s, leaves, 0, 5, true));

  GameState t(8, PatternGraph::cycle(5));
  t.play(Edge(0, 1));
  t.play(Edge(6, 7));
  t.play(Edge(0, 2));
  t.play(Edge(3, 4));
  t.play(Edge(0, 5));
  t.play(Edge(3, 6));
  t.play(Edge(1, 5));  // Constructor closes a triangle through leaf 1
  EXPECT_FALSE(is_good_edge(t, leaves, 0, 5, true));
  GameState u(8, PatternGraph::cycle(5));
  u.play(Edge(0, 1));
  u.play(Edge(0, 5));  // Blocker holds xy
  EXPECT_FALSE(is_good_edge(u, leaves, 0, 5, true));
}

TEST(ThreePhase, AuditAgainstEveryBlocker) {
  const auto f = PatternGraph::cycle(5);
  const auto h = PatternGraph::clique(3);
  for (const char* bn : {"random", "greedy", "fuzz", "jumbleg-blocker"})
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto c = three_phase_constructor(2);
      auto b = make_blocker(bn, h);
      const std::size_t n = 120;
      const auto r = run_game(n, f, h, *c, *b, seed);
      const ThreePhaseAudit a = audit_three_phase(n, r.moves());
      EXPECT_FALSE(has_cycle_of_length(r.final_state.constructor_graph(), 5)) << bn;
      EXPECT_EQ(a.phase1_rounds, n / 2) << bn;
      EXPECT_TRUE(a.stars_disjoint) << bn;
      EXPECT_TRUE(a.phase3_edges_close_triangles) << bn;
      EXPECT_EQ(a.triangles, r.score.value);
      EXPECT_GT(a.phase2_rounds, 0u);
      if (std::string(bn) == "random") {
        EXPECT_GE(2 * a.triangles, a.good_at_phase3) << seed;
      }
    }
}

TEST(ThreePhase, NeedsRoom) {
  auto c = three_phase_constructor(2);
  auto b = random_strategy();
  EXPECT_THROW(run_game(12, PatternGraph::cycle(5), PatternGraph::clique(3), *c, *b, 0),
               ConfigError);
}

TEST(HalfBlowup, RoundsAndCopiesAgainstEveryBlocker) {
  const auto f = PatternGraph::cycle(7);
  const auto h = PatternGraph::cycle(5);
  for (const char* bn : {"random", "greedy", "fuzz"})
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto c = half_blowup_constructor(2, 3);
      auto b = make_blocker(bn, h);
      const std::size_t n = 300;
      const auto r = run_game(n, f, h, *c, *b, seed);
      const SimpleGraph& g = r.final_state.constructor_graph();
      EXPECT_EQ(r.rounds, n / 5) << bn;
      EXPECT_FALSE(has_cycle_of_length(g, 7)) << bn;
      EXPECT_GE(r.score.value, (n / 30 - 1) * (n / 30 - 1)) << bn;
      EXPECT_EQ(r.reason, EndReason::PlanComplete);
    }
}

TEST(HalfBlowup, LongerCycle) {
  auto c = half_blowup_constructor(3, 4);
  auto b = make_blocker("greedy", PatternGraph::cycle(7));
  const std::size_t n = 450;
  const auto r = run_game(n, PatternGraph::cycle(9), PatternGraph::cycle(7), *c, *b, 5);
  EXPECT_FALSE(has_cycle_of_length(r.final_state.constructor_graph(), 9));
  const std::uint64_t fill = n / 45;
  EXPECT_GE(r.score.value, (fill - 1) * (fill - 1) * (fill - 1));
}

TEST(Partite, ThreePartsStayColorable) {
  auto c = partite_jumbleg_constructor(4);
  auto b = random_strategy();
  const auto r = run_game(30, PatternGraph::clique(4), PatternGraph::clique(3), *c, *b, 4);
  EXPECT_TRUE(is_colorable(r.final_state.constructor_graph(), 3));
  EXPECT_EQ(count_copies(r.final_state.constructor_graph(), PatternGraph::clique(4)).value, 0u);
}

TEST(Partite, TriangleCountAtThreeHundred) {
  auto c = partite_jumbleg_constructor(4);
  auto b = random_strategy();
  const std::size_t n = 300;
  const auto r = run_game(n, PatternGraph::clique(4), PatternGraph::clique(3), *c, *b, 11);
  const double part = n / 3.0;
  EXPECT_GE(static_cast<double>(r.score.value), 0.8 * 0.125 * part * part * part);
  EXPECT_TRUE(is_colorable(r.final_state.constructor_graph(), 3));
}

// A random Blocker wastes part of its moves off the frame, so the count sits
// above n^2/8; the frame caps it at n^2/4.
TEST(Partite, TwoPartsEdgeCount) {
  auto c = partite_jumbleg_constructor(3);
  auto b = random_strategy();
  const std::size_t n = 300;
  const auto r = run_game(n, PatternGraph::clique(3), PatternGraph::clique(2), *c, *b, 12);
  const double edges = static_cast<double>(r.score.value);
  EXPECT_GE(edges, 0.9 * n * n / 8.0);
  EXPECT_LE(edges, n * n / 4.0);
  EXPECT_TRUE(is_bipartite(r.final_state.constructor_graph()));
}

TEST(BlowupCycle, TriangleFreeAndFivePartite) {
  auto c = blowup_cycle_constructor(2);
  auto b = random_strategy();
  const auto r = run_game(40, PatternGraph::clique(3), PatternGraph::cycle(5), *c, *b, 2);
  EXPECT_EQ(triangles(r.final_state.constructor_graph()), 0u);
  EXPECT_TRUE(is_colorable(r.final_state.constructor_graph(), 3));
  EXPECT_GT(r.score.value, 0u);
}

TEST(JumbleG, BipartiteFrameMinDegree) {
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < 200; ++v) (v < 100 ? a : b).push_back(v);
  const SimpleGraph g = simulate_jumbleg(200, JumbleFrame::between(a, b), 8);
  const auto rep = epsilon_regularity_report(g, 0.1, 100, 3, std::make_pair(a, b));
  EXPECT_TRUE(rep.min_degree_ok) << rep.text();
  EXPECT_GE(rep.unbiased_fraction(), 0.95);
  for (const Edge& e : g.edges()) EXPECT_NE(e.u < 100, e.v < 100);
}

TEST(JumbleG, EquipartitionSizes) {
  Rng rng(1);
  const auto parts = random_equipartition(17, 5, rng);
  std::size_t total = 0;
  for (const auto& p : parts) {
    EXPECT_GE(p.size(), 3u);
    EXPECT_LE(p.size(), 4u);
    total += p.size();
  }
  EXPECT_EQ(total, 17u);
  EXPECT_THROW(random_equipartition(3, 4, rng), ConfigError);
  EXPECT_GT(jumbleg_epsilon(1000, 2), 0.0);
}

TEST(JumbleG, BlockerAuditAgainstRandomConstructor) {
  auto c = random_strategy();
  auto b = jumbleg_blocker();
  const std::size_t n = 256;
  const auto r = run_game(n, PatternGraph::clique(20), PatternGraph::clique(3), *c, *b, 6);
  const auto rep = epsilon_regularity_report(r.final_state.blocker_graph(), 0.1, 100, 2);
  EXPECT_TRUE(rep.min_degree_ok) << rep.text();
}

TEST(Hypergraph, ClassifyExamples) {
  GameState s(5, PatternGraph::cycle(4));
  const std::array<Vertex, 5> e{0, 1, 2, 3, 4};
  EXPECT_EQ(classify_hyperedge(s, e), HyperedgeStatus::Untouched);
  s.play(Edge(0, 1));
  EXPECT_EQ(classify_hyperedge(s, e), HyperedgeStatus::Winning);
  s.play(Edge(2, 3));
  EXPECT_EQ(classify_hyperedge(s, e), HyperedgeStatus::Lost);
  s.play(Edge(1, 2));
  s.play(Edge(3, 4));
  s.play(Edge(0, 2));
  EXPECT_EQ(classify_hyperedge(s, e), HyperedgeStatus::Won);
  EXPECT_STREQ(status_name(HyperedgeStatus::Won), "won");
}

TEST(Hypergraph, GameEndsWithEveryBoardSettled) {
  const std::size_t p = 13, n = 5 * p;
  const auto a = k_fold_sidon_greedy(p, 12, p, 0);
  const Hypergraph5 hg = hypergraph_from_sidon(a, kDefaultSidonB, p);
  for (const char* bn : {"random", "greedy", "fuzz"})
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto c = hypergraph_constructor(hg, triangle_policy_k5());
      auto b = make_blocker(bn, PatternGraph::clique(3));
      std::vector<HyperedgeStatus> prev(hg.edges.size(), HyperedgeStatus::Untouched);
      bool monotone = true;
      RunOptions opt;
      opt.observer = [&](const GameState& s) {
        if (s.history().back().player != Player::Constructor) return;
        for (std::size_t i = 0; i < hg.edges.size(); ++i) {
          const auto now = classify_hyperedge(s, hyperedge_vertices(hg, i));
          const auto was = prev[i];
          if (was == HyperedgeStatus::Won && now != HyperedgeStatus::Won) monotone = false;
          if (was == HyperedgeStatus::Lost && now != HyperedgeStatus::Lost) monotone = false;
          if (was == HyperedgeStatus::Winning && now == HyperedgeStatus::Lost) monotone = false;
          prev[i] = now;
        }
      };
      const auto r = run_game(n, PatternGraph::cycle(4), PatternGraph::clique(3), *c, *b, seed, opt);
      EXPECT_TRUE(monotone) << bn;
      EXPECT_FALSE(has_cycle_of_length(r.final_state.constructor_graph(), 4)) << bn;
      std::size_t won = 0, lost = 0;
      for (std::size_t i = 0; i < hg.edges.size(); ++i) {
        const auto st = classify_hyperedge(r.final_state, hyperedge_vertices(hg, i));
        won += st == HyperedgeStatus::Won;
        lost += st == HyperedgeStatus::Lost;
      }
      EXPECT_EQ(won + lost, hg.edges.size()) << bn;
      EXPECT_GE(won, lost) << bn;
      EXPECT_GE(r.score.value, won);
    }
}

TEST(Hypergraph, DefaultConstructorBuildsItsOwnHypergraph) {
  auto c = hypergraph_constructor();
  auto b = random_strategy();
  const auto r = run_game(65, PatternGraph::cycle(4), PatternGraph::clique(3), *c, *b, 9);
  EXPECT_FALSE(has_cycle_of_length(r.final_state.constructor_graph(), 4));
  EXPECT_GT(r.score.value, 0u);
}

// Legality under adversarial play: no strategy may forfeit.
TEST(Legality, ThousandFuzzedGames) {
  struct Setup {
    const char* constructor;
    PatternGraph f;
    PatternGraph h;
    std::size_t n_lo, n_hi;
  };
  const std::vector<Setup> setups = {
      {"three-phase:k=2", PatternGraph::cycle(5), PatternGraph::clique(3), 16, 60},
      {"half-blowup:l=2,k=3", PatternGraph::cycle(7), PatternGraph::cycle(5), 60, 120},
      {"partite-jumbleg:s=4", PatternGraph::clique(4), PatternGraph::clique(3), 6, 30},
      {"blowup-cycle:k=2", PatternGraph::clique(3), PatternGraph::cycle(5), 10, 30},
      {"hypergraph", PatternGraph::cycle(4), PatternGraph::clique(3), 65, 65},
      {"random", PatternGraph::cycle(4), PatternGraph::clique(3), 4, 20},
  };
  Rng rng(2025);
  std::size_t games = 0;
  for (int i = 0; i < 1000; ++i) {
    const Setup& st = setups[static_cast<std::size_t>(i) % setups.size()];
    const std::size_t n = st.n_lo + uniform_below(rng, st.n_hi - st.n_lo + 1);
    auto c = make_constructor(st.constructor);
    auto b = make_blocker(i % 2 ? "fuzz" : "random", st.h);
    ASSERT_NO_THROW(run_game(n, st.f, st.h, *c, *b, rng())) << st.constructor << " n=" << n;
    ++games;
  }
  EXPECT_EQ(games, 1000u);
}

#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "cbgame/canonical.hpp"
#include "cbgame/errors.hpp"
#include "cbgame/solver.hpp"
#include "oracles.hpp"

using namespace cbgame;

namespace {

const std::vector<PatternGraph>& tiny_patterns() {
  static const std::vector<PatternGraph> p = {PatternGraph::clique(2), PatternGraph::clique(3),
                                              PatternGraph::cycle(4)};
  return p;
}

}  // namespace

TEST(ExactValue, MatchesPlainMinimax) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& h : tiny_patterns())
      for (const auto& f : tiny_patterns()) {
        const SolveResult r = exact_game_value(n, h, f);
        ASSERT_TRUE(r.exact);
        EXPECT_EQ(r.lower, r.upper);
        EXPECT_EQ(r.value(), oracle::minimax(n, h.graph(), f.graph(), 0, 0, true))
            << n << ' ' << h.spec() << ' ' << f.spec();
      }
}

TEST(ExactValue, KnownSmallValues) {
  EXPECT_EQ(exact_game_value(3, PatternGraph::cycle(3), PatternGraph::cycle(3)).value(), 0);
  EXPECT_EQ(exact_game_value(2, PatternGraph::clique(2), PatternGraph::clique(3)).value(), 1);
  EXPECT_EQ(exact_game_value(5, PatternGraph::cycle(3), PatternGraph::cycle(4)).value(), 1);
}

TEST(ExactValue, BoundedByExtremalNumber) {
  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto& h : tiny_patterns())
      for (const auto& f : tiny_patterns()) {
        if (h.edge_count() == 1 && f.edge_count() == 1) continue;
        const auto ex = brute_force_ex(n, h, f);
        EXPECT_LE(exact_game_value(n, h, f).value(), static_cast<std::int64_t>(ex));
        EXPECT_EQ(ex, oracle::extremal(n, h.graph(), f.graph()));
      }
  EXPECT_EQ(brute_force_ex(5, PatternGraph::clique(2), PatternGraph::clique(3)), 6u);
}

TEST(ExactValue, BudgetGivesBounds) {
  SolveOptions opt;
  opt.budget = 50;
  const SolveResult r = exact_game_value(6, PatternGraph::clique(3), PatternGraph::cycle(4), opt);
  EXPECT_LE(r.lower, r.upper);
  const SolveResult full = exact_game_value(6, PatternGraph::clique(3), PatternGraph::cycle(4));
  EXPECT_TRUE(full.exact);
  EXPECT_LE(r.lower, full.value());
  EXPECT_GE(r.upper, full.value());
}

TEST(ExactValue, RefusesLargeBoards) {
  EXPECT_THROW(exact_game_value(kMaxSolverOrder + 1, PatternGraph::clique(3),
                                PatternGraph::cycle(4)),
               CapabilityError);
}

TEST(Policy, TriangleOnFiveVerticesWithoutC4) {
  const PolicyResult r =
      derive_policy(5, PatternGraph::cycle(3), PatternGraph::cycle(4), PolicyObjective{});
  ASSERT_TRUE(r.achieved);
  const CertificateReport cert = check_policy(r.table);
  EXPECT_TRUE(cert.ok) << cert.failure;
  EXPECT_GE(cert.min_score, 1u);
  EXPECT_GT(cert.lines, 0u);
}

TEST(Policy, PassTolerantVariant) {
  const PolicyResult r = derive_policy(5, PatternGraph::cycle(3), PatternGraph::cycle(4),
                                       PolicyObjective{1, true});
  ASSERT_TRUE(r.achieved);
  EXPECT_TRUE(check_policy(r.table).ok);
}

TEST(Policy, ImpossibleObjectives) {
  EXPECT_FALSE(derive_policy(3, PatternGraph::cycle(3), PatternGraph::cycle(3), PolicyObjective{})
                   .achieved);
  EXPECT_FALSE(derive_policy(5, PatternGraph::cycle(3), PatternGraph::cycle(4),
                             PolicyObjective{4, false})
                   .achieved);
}

TEST(Policy, TwoEdgesOnFourVertices) {
  const PolicyResult r =
      derive_policy(4, PatternGraph::clique(2), PatternGraph::clique(3), PolicyObjective{2, false});
  ASSERT_TRUE(r.achieved);
  EXPECT_TRUE(check_policy(r.table).ok);
}

TEST(Policy, WriteReadRoundTrip) {
  const PolicyResult r =
      derive_policy(5, PatternGraph::cycle(3), PatternGraph::cycle(4), PolicyObjective{});
  std::stringstream ss;
  r.table.write(ss);
  const PolicyTable back = PolicyTable::read(ss);
  EXPECT_EQ(back.entries(), r.table.entries());
  EXPECT_EQ(back.n(), 5u);
  EXPECT_EQ(back.forbidden().spec(), "c4");
  EXPECT_TRUE(check_policy(back).ok);
  std::istringstream bad("# junk\nzz 1\n");
  EXPECT_THROW(PolicyTable::read(bad), InputError);
}

TEST(Canonical, InvariantUnderRelabeling) {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 3 + uniform_below(rng, 8);
    const SimpleGraph g = oracle::random_graph(n, 0.5, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle_in_place(perm, rng);
    EXPECT_EQ(canonical_form(g).code, canonical_form(g.relabeled(perm)).code);
  }
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
  EXPECT_NE(canonical_form(SimpleGraph::cycle(6)).code,
            canonical_form([] {
              SimpleGraph two(6);
              for (Vertex base : {0u, 3u}) {
                two.add_edge(base, base + 1);
                two.add_edge(base + 1, base + 2);
                two.add_edge(base, base + 2);
              }
              return two;
            }())
                .code);
  EXPECT_NE(canonical_form(SimpleGraph::path(5)).code,
            canonical_form(SimpleGraph::cycle(5)).code);
}

TEST(Canonical, PositionKeyIgnoresLabels) {
  SimpleGraph c(6), b(6), c2(6), b2(6);
  c.add_edge(0, 1);
  c.add_edge(1, 2);
  b.add_edge(3, 4);
  c2.add_edge(5, 4);
  c2.add_edge(4, 3);
  b2.add_edge(0, 1);
  const auto f = PatternGraph::cycle(3);
  EXPECT_EQ(position_key(6, f, c, b, Player::Constructor).key,
            position_key(6, f, c2, b2, Player::Constructor).key);
}

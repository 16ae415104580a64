#include <gtest/gtest.h>

#include "cbgame/constructions.hpp"
#include "cbgame/errors.hpp"
#include "oracles.hpp"

using namespace cbgame;

TEST(Turan, SmallCases) {
  EXPECT_EQ(turan_graph(5, 2).size(), 6u);
  EXPECT_EQ(turan_graph(6, 3).size(), 12u);
  EXPECT_EQ(turan_part_sizes(4, 3), (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_EQ(turan_graph(4, 3).size(), 5u);
  EXPECT_THROW(turan_graph(3, 4), InputError);
}

TEST(Turan, EdgeCountMatchesGraph) {
  for (std::size_t n = 1; n <= 20; ++n)
    for (std::size_t r = 1; r <= n; ++r) {
      const SimpleGraph t = turan_graph(n, r);
      ASSERT_EQ(turan_edge_count(n, r), t.size());
      ASSERT_TRUE(is_colorable(t, r));
    }
}

TEST(Zykov, Examples) {
  EXPECT_EQ(zykov_count(9, 3, 4).value, 27u);
  EXPECT_EQ(zykov_count(7, 3, 4).value, 12u);
  EXPECT_EQ(zykov_count(7, 3, 4), count_copies(turan_graph(7, 3), PatternGraph::clique(3)));
  EXPECT_THROW(zykov_count(5, 3, 3), InputError);
}

TEST(Zykov, MantelAndTuranAgreeWithExhaustiveSearch) {
  // ex(5, K2, K3) and ex(5, K3, K4) by enumerating all labeled graphs.
  EXPECT_EQ(oracle::extremal(5, SimpleGraph::complete(2), SimpleGraph::complete(3)), 6u);
  EXPECT_EQ(zykov_count(5, 2, 3).value, 6u);
  EXPECT_EQ(oracle::extremal(5, SimpleGraph::complete(3), SimpleGraph::complete(4)),
            zykov_count(5, 3, 4).value);
}

TEST(Zykov, MatchesDirectCountEverywhere) {
  for (std::size_t s = 3; s <= 5; ++s)
    for (std::size_t r = 2; r < s; ++r)
      for (std::size_t n = s - 1; n <= 14; ++n)
        ASSERT_EQ(zykov_count(n, r, s),
                  count_copies(turan_graph(n, s - 1), PatternGraph::clique(r)))
            << n << ' ' << r << ' ' << s;
}

TEST(HalfBlowup, ElevenVertices) {
  const HalfBlowup hb = half_blowup_graph(11, 2);
  EXPECT_EQ(hb.graph.order(), 11u);
  EXPECT_EQ(hb.graph.size(), 17u);
  ASSERT_EQ(hb.parts.size(), 5u);
  EXPECT_EQ(hb.parts[1].size(), 4u);
  EXPECT_EQ(hb.parts[0].size(), 1u);
  EXPECT_FALSE(hb.rounded);
}

TEST(HalfBlowup, SmallestOrderHasOddPartsOfTwo) {
  for (std::size_t l = 2; l <= 5; ++l) {
    const HalfBlowup hb = half_blowup_graph(3 * l + 1, l);
    for (std::size_t i = 1; i < hb.parts.size(); i += 2) EXPECT_EQ(hb.parts[i].size(), 2u);
  }
  EXPECT_THROW(half_blowup_graph(6, 2), InputError);
}

TEST(HalfBlowup, NoLongerOddCycles) {
  for (std::size_t l = 2; l <= 3; ++l)
    for (std::size_t n = 3 * l + 1; n <= 13; ++n) {
      const HalfBlowup hb = half_blowup_graph(n, l);
      EXPECT_TRUE(has_cycle_of_length(hb.graph, 2 * l + 1));
      for (std::size_t k = l + 1; 2 * k + 1 <= n; ++k)
        EXPECT_FALSE(has_cycle_of_length(hb.graph, 2 * k + 1)) << n << ' ' << l << ' ' << k;
    }
}

TEST(EvenCycleFree, ProjectivePlaneQ3) {
  const BipartiteConstruction b = even_cycle_free_bipartite(26, 2);
  EXPECT_EQ(b.method, "incidence:q=3");
  EXPECT_EQ(b.graph.order(), 26u);
  EXPECT_EQ(b.graph.size(), 52u);
  EXPECT_GE(girth(b.graph), 6u);
  EXPECT_FALSE(oracle::has_copy(b.graph.induced(std::vector<Vertex>{0, 1, 2, 3, 13, 14, 15, 16}),
                                SimpleGraph::cycle(4)));
  EXPECT_FALSE(has_cycle_of_length(b.graph, 4));
}

TEST(EvenCycleFree, GreedyK3) {
  const BipartiteConstruction b = even_cycle_free_bipartite(30, 3);
  EXPECT_EQ(b.method, "greedy");
  EXPECT_FALSE(has_cycle_of_length(b.graph, 4));
  EXPECT_FALSE(has_cycle_of_length(b.graph, 6));
  EXPECT_TRUE(is_bipartite(b.graph));
  EXPECT_GT(b.graph.size(), 30u);
}

TEST(EvenCycleFree, GirthCertifiedAcrossSizes) {
  for (std::size_t m : {8u, 20u, 64u, 150u, 400u})
    for (std::size_t k = 2; k <= 4; ++k) {
      const BipartiteConstruction b = even_cycle_free_bipartite(m, k);
      ASSERT_LE(b.graph.order(), m);
      const std::size_t g = girth(b.graph);
      ASSERT_TRUE(g == 0 || g > 2 * k) << m << ' ' << k;
    }
}

TEST(Girth, Basics) {
  EXPECT_EQ(girth(SimpleGraph::cycle(7)), 7u);
  EXPECT_EQ(girth(SimpleGraph::path(7)), 0u);
  EXPECT_EQ(girth(SimpleGraph::complete(4)), 3u);
  EXPECT_TRUE(is_prime(101));
  EXPECT_FALSE(is_prime(91));
}

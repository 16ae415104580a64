#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "cbgame/analysis.hpp"
#include "cbgame/errors.hpp"
#include "cbgame/strategies.hpp"
#include "cbgame/transcript.hpp"
#include "oracles.hpp"

using namespace cbgame;

TEST(Fit, SquareRootLaw) {
  const FitResult f = fit_exponent({{1, 1}, {4, 2}, {16, 4}});
  EXPECT_NEAR(f.alpha, 0.5, 1e-12);
  EXPECT_NEAR(f.c, 1.0, 1e-12);
  EXPECT_LT(f.residual, 1e-12);
  EXPECT_EQ(f.samples, 3u);
}

TEST(Fit, RecoversPlantedExponents) {
  for (double alpha : {0.7, 1.5, 2.0, 3.0})
    for (double c : {0.01, 1.0, 42.0}) {
      std::vector<std::pair<double, double>> pts;
      for (double n : {10.0, 20.0, 50.0, 200.0, 1000.0}) pts.emplace_back(n, c * std::pow(n, alpha));
      const FitResult f = fit_exponent(pts);
      EXPECT_NEAR(f.alpha, alpha, 1e-9);
      EXPECT_NEAR(f.c / c, 1.0, 1e-9);
      EXPECT_LT(f.residual, 1e-9);
    }
}

TEST(Fit, NoisyDataHasResidual) {
  const FitResult f = fit_exponent({{10, 100}, {20, 500}, {40, 1400}});
  EXPECT_GT(f.residual, 0.01);
}

TEST(Fit, RejectsDegenerateInput) {
  EXPECT_THROW(fit_exponent({{2, 3}}), InputError);
  EXPECT_THROW(fit_exponent({{2, 3}, {2, 5}}), InputError);
  EXPECT_THROW(fit_exponent({{2, 0}, {4, 5}}), InputError);
  EXPECT_THROW(fit_exponent({{-2, 1}, {4, 5}}), InputError);
}

TEST(Fit, TextAndJson) {
  const FitResult f = fit_exponent({{1, 2}, {2, 8}});
  EXPECT_NE(fit_text(f).find("alpha"), std::string::npos);
  EXPECT_NE(fit_json(f).find("\"alpha\""), std::string::npos);
}

TEST(Regularity, CompleteAndEmptyGraphsFail) {
  const auto full = epsilon_regularity_report(SimpleGraph::complete(60), 0.1, 50, 1);
  EXPECT_TRUE(full.min_degree_ok);
  EXPECT_EQ(full.unbiased_count(), 0u);
  EXPECT_FALSE(full.passed());
  const auto empty = epsilon_regularity_report(SimpleGraph(60), 0.1, 50, 1);
  EXPECT_FALSE(empty.min_degree_ok);
  EXPECT_FALSE(empty.passed());
}

TEST(Regularity, HalfDenseRandomGraphPasses) {
  Rng rng(4);
  const SimpleGraph g = oracle::random_graph(300, 0.5, rng);
  const auto rep = epsilon_regularity_report(g, 0.15, 100, 7);
  EXPECT_TRUE(rep.passed(0.95)) << rep.text();
  EXPECT_EQ(rep.pairs.size(), 100u);
  EXPECT_EQ(rep.pairs.front().s_size, static_cast<std::size_t>(std::ceil(0.15 * 300)) + 1);
}

TEST(Regularity, RejectsBadParameters) {
  EXPECT_THROW(epsilon_regularity_report(SimpleGraph(10), 0.0, 5, 1), InputError);
  EXPECT_THROW(epsilon_regularity_report(SimpleGraph(10), 0.5, 5, 1), InputError);
  EXPECT_THROW(epsilon_regularity_report(SimpleGraph(10), 0.1, 0, 1), InputError);
}

namespace {

SweepConfig small_sweep(unsigned threads) {
  SweepConfig cfg;
  cfg.ns = {24, 40};
  cfg.forbidden = "c5";
  cfg.target = "k3";
  cfg.constructor = "three-phase:k=2";
  cfg.blocker = "random";
  cfg.reps = 3;
  cfg.master_seed = 77;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

TEST(Sweep, DeterministicAcrossThreadCounts) {
  const auto one = score_table(small_sweep(1));
  const auto many = score_table(small_sweep(4));
  ASSERT_EQ(one.size(), 6u);
  ASSERT_EQ(many.size(), one.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_TRUE(one[i].same_outcome(many[i])) << i;
  EXPECT_EQ(one[0].n, 24u);
  EXPECT_EQ(one[5].n, 40u);
}

TEST(Sweep, CsvRoundTrip) {
  const auto rows = score_table(small_sweep(2));
  std::stringstream ss;
  write_sweep_csv(ss, rows);
  EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), kSweepHeader);
  const auto back = read_sweep_csv(ss);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_TRUE(rows[i].same_outcome(back[i]));
  std::istringstream bad("n,F\n1,2\n");
  EXPECT_THROW(read_sweep_csv(bad), InputError);
}

TEST(Sweep, RowsMatchReplayedGames) {
  const auto cfg = small_sweep(2);
  const auto rows = score_table(cfg);
  for (const auto& row : rows) {
    auto c = make_constructor(row.constructor);
    auto b = make_blocker(row.blocker, PatternGraph::parse(row.target));
    const auto r = run_game(row.n, PatternGraph::parse(row.forbidden),
                            PatternGraph::parse(row.target), *c, *b, row.seed);
    std::istringstream is(transcript_text(r));
    const GameState s = replay(read_transcript(is));
    EXPECT_EQ(score(s, PatternGraph::parse(row.target)).value, row.score);
    EXPECT_EQ(r.rounds, row.rounds);
  }
}

TEST(Sweep, MeanScoreByN) {
  std::vector<SweepRow> rows(4);
  rows[0].n = 10;
  rows[0].score = 2;
  rows[1].n = 10;
  rows[1].score = 4;
  rows[2].n = 20;
  rows[2].score = 9;
  rows[3].n = 20;
  rows[3].score = 11;
  const auto means = mean_score_by_n(rows);
  ASSERT_EQ(means.size(), 2u);
  EXPECT_DOUBLE_EQ(means[0].second, 3.0);
  EXPECT_DOUBLE_EQ(means[1].second, 10.0);
}

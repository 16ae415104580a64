#include <gtest/gtest.h>

#include <sstream>

#include "cbgame/errors.hpp"
#include "cbgame/game.hpp"
#include "cbgame/strategies.hpp"
#include "cbgame/transcript.hpp"

using namespace cbgame;

namespace {

/// Plays a fixed list of edges, then passes.
class Scripted : public Strategy {
 public:
  explicit Scripted(std::vector<Edge> moves, bool complete_at_end = false)
      : moves_(std::move(moves)), complete_(complete_at_end) {}
  std::string name() const override { return "scripted"; }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<Scripted>(*this); }
  void reset(const GameState&, Rng&) override { next_ = 0; }
  Decision choose(const GameState&, Rng&) override {
    if (next_ < moves_.size()) return Choice{moves_[next_++], "script"};
    if (complete_) return PlanComplete{"done"};
    return Pass{};
  }

 private:
  std::vector<Edge> moves_;
  bool complete_;
  std::size_t next_ = 0;
};

}  // namespace

TEST(GameState, FreshBoard) {
  const GameState s(4, PatternGraph::cycle(3));
  EXPECT_EQ(s.legal_moves().size(), 6u);
  EXPECT_FALSE(s.is_terminal());
  EXPECT_EQ(s.to_move(), Player::Constructor);
  EXPECT_EQ(s.unclaimed_count(), 6u);
}

TEST(GameState, LegalMovesExcludeForbiddenClosures) {
  GameState s(3, PatternGraph::cycle(3));
  s.play(Edge(0, 1));
  s.play(Edge(1, 2));  // Blocker
  EXPECT_EQ(s.to_move(), Player::Constructor);
  // Constructor holds 0-1; Blocker 1-2; 0-2 is legal.
  EXPECT_EQ(s.legal_moves().size(), 1u);

  // Constructor: 0-1, 1-2. Blocker: 2-3, 1-3.
  GameState u(4, PatternGraph::cycle(3));
  u.play(Edge(0, 1));
  u.play(Edge(2, 3));
  u.play(Edge(1, 2));
  u.play(Edge(1, 3));
  for (const Edge& e : u.legal_moves()) EXPECT_NE(e, Edge(0, 2));
}

TEST(GameState, C4ClosuresExcludedOnK5) {
  GameState s(5, PatternGraph::cycle(4));
  // Constructor: 0-1, 1-2, 2-3 (a path); Blocker elsewhere.
  s.play(Edge(0, 1));
  s.play(Edge(0, 4));
  s.play(Edge(1, 2));
  s.play(Edge(1, 4));
  s.play(Edge(2, 3));
  s.play(Edge(2, 4));
  EXPECT_EQ(s.to_move(), Player::Constructor);
  for (const Edge& e : s.legal_moves()) {
    EXPECT_NE(e, Edge(0, 3));
    EXPECT_FALSE(creates_copy(s.constructor_graph(), e, PatternGraph::cycle(4)));
  }
  EXPECT_FALSE(s.constructor_may_claim(Edge(0, 3)));
}

TEST(GameState, ApplyValidatesRules) {
  const GameState s(4, PatternGraph::cycle(3));
  const GameState t = s.apply(Move{Player::Constructor, Edge(0, 1), 1, ""});
  EXPECT_EQ(t.constructor_graph().size(), 1u);
  EXPECT_EQ(t.to_move(), Player::Blocker);
  EXPECT_EQ(s.constructor_graph().size(), 0u);

  auto rule_of = [](auto&& f) {
    try {
      f();
    } catch (const RuleViolation& rv) {
      return rv.rule();
    }
    ADD_FAILURE() << "no violation";
    return Rule::GameOver;
  };
  EXPECT_EQ(rule_of([&] { t.apply(Move{Player::Blocker, Edge(0, 1), 1, ""}); }),
            Rule::AlreadyClaimed);
  EXPECT_EQ(rule_of([&] { t.apply(Move{Player::Constructor, Edge(1, 2), 2, ""}); }),
            Rule::WrongTurn);
  EXPECT_EQ(rule_of([&] { t.apply(Move{Player::Blocker, Edge(1, 1), 1, ""}); }), Rule::SelfLoop);
  EXPECT_EQ(rule_of([&] { t.apply(Move{Player::Blocker, Edge(1, 9), 1, ""}); }),
            Rule::EdgeOutOfRange);

  GameState u(4, PatternGraph::cycle(3));
  u.play(Edge(0, 1));
  u.play(Edge(2, 3));
  u.play(Edge(1, 2));
  u.play(Edge(0, 3));
  EXPECT_EQ(rule_of([&] { u.play(Edge(0, 2)); }), Rule::CreatesForbidden);
}

TEST(GameState, TerminalConditions) {
  GameState s(3, PatternGraph::cycle(3));
  EXPECT_FALSE(s.is_terminal());
  s.play(Edge(0, 1));
  s.play(Edge(1, 2));
  s.play(Edge(0, 2));
  EXPECT_TRUE(s.is_terminal());
  EXPECT_EQ(s.terminal_reason(), EndReason::BoardFull);

  // Only 0-2 is left and it closes 0-1-2.
  GameState u(4, PatternGraph::cycle(3));
  u.play(Edge(0, 1));
  u.play(Edge(0, 3));
  u.play(Edge(1, 2));
  u.play(Edge(1, 3));
  u.play(Edge(2, 3));
  EXPECT_TRUE(u.is_terminal());
  EXPECT_EQ(u.terminal_reason(), EndReason::ConstructorFrozen);
  EXPECT_THROW(u.play(Edge(0, 2)), RuleViolation);
}

TEST(RunGame, TrivialBoards) {
  auto c = random_strategy();
  auto b = random_strategy();
  const auto r2 = run_game(2, PatternGraph::clique(3), PatternGraph::clique(2), *c, *b, 1);
  EXPECT_EQ(r2.score.value, 1u);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r3 = run_game(3, PatternGraph::cycle(3), PatternGraph::cycle(3), *c, *b, seed);
    EXPECT_EQ(r3.score.value, 0u);
  }
}

TEST(RunGame, DeterministicPerSeed) {
  auto c = random_strategy();
  auto b = random_strategy();
  const auto a1 = run_game(9, PatternGraph::cycle(4), PatternGraph::clique(3), *c, *b, 42);
  const auto a2 = run_game(9, PatternGraph::cycle(4), PatternGraph::clique(3), *c, *b, 42);
  EXPECT_EQ(a1.moves(), a2.moves());
  EXPECT_EQ(a1.score, a2.score);
}

TEST(RunGame, RandomPlayRespectsRules) {
  auto c = random_strategy();
  auto b = random_strategy();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = run_game(12, PatternGraph::cycle(4), PatternGraph::clique(3), *c, *b, seed);
    EXPECT_FALSE(has_cycle_of_length(r.final_state.constructor_graph(), 4));
    EXPECT_TRUE(r.final_state.is_terminal());
    EXPECT_EQ(r.rounds, r.final_state.constructor_graph().size());
  }
}

TEST(RunGame, IllegalMoveForfeits) {
  Scripted c({Edge(0, 1), Edge(0, 1)});
  auto b = random_strategy();
  try {
    run_game(5, PatternGraph::cycle(3), PatternGraph::clique(3), c, *b, 3);
    FAIL() << "expected forfeit";
  } catch (const Forfeit& f) {
    EXPECT_EQ(f.strategy(), "scripted");
  }
}

TEST(RunGame, PassWithMovesForfeits) {
  Scripted c({});
  auto b = random_strategy();
  EXPECT_THROW(run_game(5, PatternGraph::cycle(3), PatternGraph::clique(3), c, *b, 3), Forfeit);
}

TEST(RunGame, PlanCompleteEndsGame) {
  Scripted c({Edge(0, 1)}, true);
  auto b = random_strategy();
  const auto r = run_game(6, PatternGraph::cycle(3), PatternGraph::clique(2), c, *b, 3);
  EXPECT_EQ(r.reason, EndReason::PlanComplete);
  EXPECT_EQ(r.score.value, 1u);
  EXPECT_EQ(r.moves().size(), 2u);
}

TEST(Transcript, RoundTripAndReplay) {
  auto c = random_strategy();
  auto b = random_strategy();
  const auto r = run_game(10, PatternGraph::cycle(4), PatternGraph::clique(3), *c, *b, 17);
  std::istringstream is(transcript_text(r));
  const Transcript t = read_transcript(is);
  EXPECT_EQ(t.header, r.header);
  EXPECT_EQ(t.moves, r.moves());
  const GameState s = replay(t);
  EXPECT_EQ(s.constructor_graph(), r.final_state.constructor_graph());
  EXPECT_EQ(score(s, PatternGraph::clique(3)), r.score);
}

TEST(Transcript, ReplayRejectsTampering) {
  GameHeader h{4, "c3", "k3", 0, "x", "y"};
  std::vector<Move> moves = {{Player::Constructor, Edge(0, 1), 1, ""},
                             {Player::Blocker, Edge(0, 1), 1, ""}};
  std::ostringstream os;
  write_transcript(os, h, moves);
  std::istringstream is(os.str());
  EXPECT_THROW(replay(read_transcript(is)), RuleViolation);
  std::istringstream bad("{\"n\":4}\n{\"round\":1}\n");
  EXPECT_THROW(read_transcript(bad), InputError);
}

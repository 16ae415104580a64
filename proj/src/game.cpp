#include "cbgame/game.hpp"

#include "cbgame/errors.hpp"

namespace cbgame {

const char* end_reason_name(EndReason r) {
  switch (r) {
    case EndReason::None: return "none";
    case EndReason::BoardFull: return "board-full";
    case EndReason::ConstructorFrozen: return "constructor-frozen";
    case EndReason::PlanComplete: return "plan-complete";
  }
  return "unknown";
}

GameState::GameState(std::size_t n, PatternGraph forbidden, std::uint64_t seed)
    : n_(n), forbidden_(std::move(forbidden)), c_(n), b_(n), seed_(seed) {}

std::size_t GameState::next_round() const noexcept {
  return turn_ == Player::Constructor ? c_.size() + 1 : c_.size();
}

bool GameState::constructor_may_claim(Edge e) const {
  return !is_claimed(e) && !creates_copy(c_, e, forbidden_);
}

bool GameState::is_legal(Edge e) const {
  if (e.u == e.v || e.v >= n_) return false;
  return turn_ == Player::Constructor ? constructor_may_claim(e) : !is_claimed(e);
}

std::vector<Edge> GameState::legal_moves() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (is_legal(Edge(u, v))) out.emplace_back(u, v);
  return out;
}

EndReason GameState::terminal_reason() const {
  if (unclaimed_count() == 0) return EndReason::BoardFull;
  const std::uint64_t total = pair_count(n_);
  while (cursor_ < total) {
    if (constructor_may_claim(edge_at(n_, cursor_))) return EndReason::None;
    ++cursor_;
  }
  return EndReason::ConstructorFrozen;
}

bool GameState::is_terminal() const { return terminal_reason() != EndReason::None; }

void GameState::check(Player who, Edge e) const {
  if (e.u >= n_ || e.v >= n_)
    throw RuleViolation(Rule::EdgeOutOfRange, "vertex outside 0.." + std::to_string(n_ - 1));
  if (e.u == e.v) throw RuleViolation(Rule::SelfLoop, "loop at " + std::to_string(e.u));
  if (who != turn_)
    throw RuleViolation(Rule::WrongTurn, std::string("it is ") + player_code(turn_) + "'s move");
  if (is_terminal()) throw RuleViolation(Rule::GameOver, "the game has ended");
  if (is_claimed(e)) {
    std::string where = c_.has_edge(e) ? "Constructor" : "Blocker";
    throw RuleViolation(Rule::AlreadyClaimed,
                        std::to_string(e.u) + "-" + std::to_string(e.v) + " held by " + where);
  }
  if (who == Player::Constructor && creates_copy(c_, e, forbidden_))
    throw RuleViolation(Rule::CreatesForbidden, std::to_string(e.u) + "-" + std::to_string(e.v) +
                                                    " completes " + forbidden_.spec());
}

void GameState::play(Edge e, std::string tag) {
  check(turn_, e);
  history_.push_back(Move{turn_, e, next_round(), std::move(tag)});
  (turn_ == Player::Constructor ? c_ : b_).add_edge(e);
  turn_ = other(turn_);
}

GameState GameState::apply(const Move& move) const {
  check(move.player, move.edge);
  GameState next = *this;
  next.play(move.edge, move.tag);
  return next;
}

CopyCount score(const GameState& state, const PatternGraph& h) {
  return count_copies(state.constructor_graph(), h);
}

namespace {

[[noreturn]] void forfeit(const Strategy& s, const std::string& detail) {
  throw Forfeit(s.name(), detail);
}

}  // namespace

GameResult run_game(std::size_t n, const PatternGraph& forbidden, const PatternGraph& target,
                    Strategy& constructor, Strategy& blocker, std::uint64_t seed,
                    const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  GameState state(n, forbidden, seed);
  Rng rng(seed);
  constructor.reset(state, rng);
  blocker.reset(state, rng);
  EndReason reason = EndReason::None;
  while ((reason = state.terminal_reason()) == EndReason::None) {
    const bool c_turn = state.to_move() == Player::Constructor;
    Strategy& mover = c_turn ? constructor : blocker;
    const Decision d = mover.choose(state, rng);
    if (const auto* pc = std::get_if<PlanComplete>(&d)) {
      if (!c_turn) forfeit(mover, "Blocker cannot declare a plan complete");
      (void)pc;
      reason = EndReason::PlanComplete;
      break;
    }
    if (std::holds_alternative<Pass>(d)) forfeit(mover, "passed while legal moves exist");
    const auto& choice = std::get<Choice>(d);
    try {
      state.play(choice.edge, choice.tag);
    } catch (const RuleViolation& rv) {
      forfeit(mover, rv.what());
    }
    if (options.observer) options.observer(state);
  }
  const auto stop = std::chrono::steady_clock::now();
  GameHeader header{n, forbidden.spec(), target.spec(), seed, constructor.name(), blocker.name()};
  const CopyCount s = score(state, target);
  const std::size_t rounds = state.constructor_graph().size();
  const double millis = std::chrono::duration<double, std::milli>(stop - start).count();
  return GameResult{std::move(header), s, rounds, reason, std::move(state), millis};
}

}  // namespace cbgame

#include <queue>
#include <tuple>

#include "cbgame/errors.hpp"
#include "cbgame/strategies.hpp"
#include "strategy_util.hpp"

namespace cbgame {
namespace {

constexpr std::size_t kGenericThreatOrder = 40;
// Per-move cap on enumerated near-cycles; beyond it threat counts are partial.
constexpr std::uint64_t kPathBudget = 4'000'000;

/// Threat bookkeeping: for every pair, the number of copies of H minus one
/// edge in Constructor's graph that the pair would complete.
class ThreatTracker {
 public:
  void reset(const GameState& s, const PatternGraph& h) {
    n_ = s.n();
    h_ = h;
    c_ = SimpleGraph(n_);
    count_.assign(pair_count(n_), 0);
    heap_ = {};
    seen_ = 0;
    stamp_.assign(n_, 0);
    epoch_ = 0;
    mode_ = Mode::Generic;
    if (h.vertex_count() == 2) {
      mode_ = Mode::None;
    } else if (h.kind() == PatternGraph::Kind::Cycle ||
               (h.kind() == PatternGraph::Kind::Clique && h.first() == 3)) {
      mode_ = Mode::Cycle;
      cycle_ = h.vertex_count();
    } else if (n_ > kGenericThreatOrder) {
      throw ConfigError("greedy blocker: generic threat counting limited to n <= " +
                        std::to_string(kGenericThreatOrder) + " (H=" + h.spec() + ")");
    }
  }

  void sync(const GameState& s, Rng& rng) {
    const auto& hist = s.history();
    for (; seen_ < hist.size(); ++seen_) {
      if (hist[seen_].player != Player::Constructor) continue;
      const Edge e = hist[seen_].edge;
      if (mode_ == Mode::Cycle) add_cycle_paths(e, rng);
      c_.add_edge(e);
      if (mode_ == Mode::Generic) recount_all(s, rng);
    }
  }

  /// Highest-threat unclaimed pair, if any pair carries a threat.
  std::optional<Edge> best(const GameState& s) {
    while (!heap_.empty()) {
      const auto [cnt, tie, idx] = heap_.top();
      (void)tie;
      const Edge e = edge_at(n_, idx);
      if (cnt != count_[idx] || cnt == 0 || s.is_claimed(e)) {
        heap_.pop();
        continue;
      }
      return e;
    }
    return std::nullopt;
  }

 private:
  enum class Mode { None, Cycle, Generic };

  void bump(Vertex a, Vertex b, Rng& rng) {
    const std::uint64_t idx = edge_index(n_, Edge(a, b));
    ++count_[idx];
    heap_.emplace(count_[idx], rng(), idx);
  }

  void recount_all(const GameState& s, Rng& rng) {
    heap_ = {};
    for (std::uint64_t idx = 0; idx < count_.size(); ++idx) {
      const Edge e = edge_at(n_, idx);
      if (s.is_claimed(e) || c_.has_edge(e)) {
        count_[idx] = 0;
        continue;
      }
      count_[idx] = copies_through_edge(c_, e, h_.graph()).value;
      if (count_[idx] > 0) heap_.emplace(count_[idx], rng(), idx);
    }
  }

  // New paths on `cycle_` vertices through the fresh edge xy; each one makes
  // its endpoint pair a threat.
  void add_cycle_paths(Edge e, Rng& rng) {
    const std::size_t span = cycle_ - 2;
    std::uint64_t budget = kPathBudget;
    std::vector<Vertex> left;
    for (std::size_t i = 0; i <= span; ++i) {
      const std::size_t j = span - i;
      left.clear();
      walk_left(e.u, e.v, e.u, i, j, left, budget, rng);
      if (budget == 0) return;
    }
  }

  void walk_left(Vertex x, Vertex y, Vertex at, std::size_t remaining, std::size_t j,
                 std::vector<Vertex>& path, std::uint64_t& budget, Rng& rng) {
    if (budget == 0) return;
    if (remaining == 0) {
      ++epoch_;
      stamp_[x] = epoch_;
      stamp_[y] = epoch_;
      for (Vertex v : path) stamp_[v] = epoch_;
      walk_right(y, j, at, budget, rng);
      return;
    }
    for (Vertex w : c_.neighbors(at)) {
      if (w == x || w == y) continue;
      bool used = false;
      for (Vertex v : path) used |= v == w;
      if (used) continue;
      path.push_back(w);
      walk_left(x, y, w, remaining - 1, j, path, budget, rng);
      path.pop_back();
    }
  }

  void walk_right(Vertex at, std::size_t remaining, Vertex end_left, std::uint64_t& budget,
                  Rng& rng) {
    if (budget == 0) return;
    if (remaining == 0) {
      --budget;
      bump(end_left, at, rng);
      return;
    }
    const std::uint32_t mark = epoch_;
    for (Vertex w : c_.neighbors(at)) {
      if (stamp_[w] == mark) continue;
      const std::uint32_t saved = stamp_[w];
      stamp_[w] = mark;
      walk_right(w, remaining - 1, end_left, budget, rng);
      stamp_[w] = saved;
    }
  }

  using Entry = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

  std::size_t n_ = 0;
  PatternGraph h_ = PatternGraph::clique(2);
  SimpleGraph c_;
  std::vector<std::uint64_t> count_;
  std::priority_queue<Entry> heap_;
  std::size_t seen_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  Mode mode_ = Mode::None;
  std::size_t cycle_ = 0;
};

std::optional<Edge> random_unclaimed(const GameState& s, Rng& rng) {
  return detail::sample_pair(s.n(), rng, [&](Edge e) { return !s.is_claimed(e); });
}

class GreedyBlocker : public Strategy {
 public:
  explicit GreedyBlocker(PatternGraph h) : h_(std::move(h)) {}
  std::string name() const override { return "greedy"; }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<GreedyBlocker>(h_); }

  void reset(const GameState& s, Rng&) override { tracker_.reset(s, h_); }

  Decision choose(const GameState& s, Rng& rng) override {
    tracker_.sync(s, rng);
    if (auto e = tracker_.best(s)) return Choice{*e, "threat"};
    if (auto e = random_unclaimed(s, rng)) return Choice{*e, "random"};
    return Pass{};
  }

 private:
  PatternGraph h_;
  ThreatTracker tracker_;
};

class FuzzBlocker : public Strategy {
 public:
  explicit FuzzBlocker(PatternGraph h) : h_(std::move(h)) {}
  std::string name() const override { return "fuzz"; }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<FuzzBlocker>(h_); }

  void reset(const GameState& s, Rng&) override { tracker_.reset(s, h_); }

  Decision choose(const GameState& s, Rng& rng) override {
    tracker_.sync(s, rng);
    switch (uniform_below(rng, 3)) {
      case 0:
        if (auto e = near_last(s, rng)) return Choice{*e, "adjacent"};
        break;
      case 1:
        if (auto e = tracker_.best(s)) return Choice{*e, "threat"};
        break;
      default:
        break;
    }
    if (auto e = random_unclaimed(s, rng)) return Choice{*e, "random"};
    return Pass{};
  }

 private:
  static std::optional<Edge> near_last(const GameState& s, Rng& rng) {
    const auto last = detail::last_move_by(s, Player::Constructor);
    if (!last) return std::nullopt;
    const std::size_t n = s.n();
    for (int t = 0; t < 32; ++t) {
      const Vertex a = uniform_below(rng, 2) ? last->edge.u : last->edge.v;
      const auto b = static_cast<Vertex>(uniform_below(rng, n));
      if (a != b && !s.is_claimed(Edge(a, b))) return Edge(a, b);
    }
    return std::nullopt;
  }

  PatternGraph h_;
  ThreatTracker tracker_;
};

}  // namespace

std::unique_ptr<Strategy> greedy_blocker(const PatternGraph& h) {
  return std::make_unique<GreedyBlocker>(h);
}

std::unique_ptr<Strategy> fuzz_blocker(const PatternGraph& h) {
  return std::make_unique<FuzzBlocker>(h);
}

}  // namespace cbgame

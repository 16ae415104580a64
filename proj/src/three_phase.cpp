#include <algorithm>
#include <numeric>
#include <set>

#include "cbgame/constructions.hpp"
#include "cbgame/errors.hpp"
#include "cbgame/strategies.hpp"
#include "strategy_util.hpp"

namespace cbgame {

bool is_good_edge(const GameState& state, const std::array<Vertex, 2>& leaves, Vertex x, Vertex y,
                  bool claimed_in_phase2) {
  if (!claimed_in_phase2 || !state.constructor_graph().has_edge(x, y)) return false;
  bool some_free = false;
  for (Vertex a : leaves) {
    if (a == y) return false;
    if (state.constructor_graph().has_edge(a, y)) return false;
    some_free |= !state.blocker_graph().has_edge(a, y);
  }
  return some_free;
}

namespace {

constexpr Vertex kNone = ~Vertex{0};

class ThreePhase : public Strategy {
 public:
  explicit ThreePhase(std::size_t k) : k_(k) {}

  std::string name() const override { return "three-phase:k=" + std::to_string(k_); }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<ThreePhase>(k_); }

  void reset(const GameState& s, Rng& rng) override {
    const PatternGraph& f = s.forbidden();
    if (f.kind() != PatternGraph::Kind::Cycle || f.first() != 2 * k_ + 1)
      throw ConfigError(name() + " needs F = C" + std::to_string(2 * k_ + 1) + ", got " + f.spec());
    if (s.n() < 16) throw ConfigError(name() + " needs n >= 16");
    n_ = s.n();
    stars_ = n_ / 4;
    in_star_.assign(n_, false);
    center_of_leaf_.assign(n_, kNone);
    leaves_.assign(n_, {kNone, kNone});
    centers_.clear();
    current_ = kNone;
    phase_ = 1;
    b_edges_.clear();
    next_b_ = 0;
    good_.clear();
    phase2_.clear();
    (void)rng;
  }

  Decision choose(const GameState& s, Rng& rng) override {
    if (phase_ == 1) {
      if (auto c = phase_one(s, rng)) return *c;
      start_phase_two(s, rng);
    }
    if (phase_ == 2) {
      for (; next_b_ < b_edges_.size(); ++next_b_) {
        const Edge e = b_edges_[next_b_];
        if (s.is_claimed(e)) continue;
        if (!s.constructor_may_claim(e))
          throw InternalError(name() + ": Phase II edge would close F");
        ++next_b_;
        phase2_.insert(edge_index(n_, e));
        return Choice{e, "II"};
      }
      phase_ = 3;
      for (std::uint64_t idx : phase2_) good_.push_back(edge_at(n_, idx));
    }
    if (auto c = phase_three(s, rng)) return *c;
    return PlanComplete{"no good pairs left"};
  }

 private:
  std::size_t blocker_degree(const GameState& s, Vertex v) const {
    return s.blocker_graph().degree(v);
  }

  // Vertex outside every star, lowest Blocker degree, random among ties.
  Vertex pick_fresh(const GameState& s, Rng& rng, Vertex center) {
    Vertex best = kNone;
    std::size_t bd = SIZE_MAX, ties = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (in_star_[v] || v == center) continue;
      if (center != kNone && s.is_claimed(Edge(center, v))) continue;
      const std::size_t d = blocker_degree(s, v);
      if (d < bd) {
        best = v;
        bd = d;
        ties = 1;
      } else if (d == bd && uniform_below(rng, ++ties) == 0) {
        best = v;
      }
    }
    return best;
  }

  std::optional<Choice> phase_one(const GameState& s, Rng& rng) {
    while (true) {
      if (current_ == kNone) {
        if (centers_.size() == stars_) return std::nullopt;
        current_ = pick_fresh(s, rng, kNone);
        if (current_ == kNone) throw InternalError(name() + ": no vertex for a star center");
        in_star_[current_] = true;
        centers_.push_back(current_);
      }
      auto& lv = leaves_[current_];
      const std::size_t have = (lv[0] != kNone) + (lv[1] != kNone);
      if (have == 2) {
        current_ = kNone;
        continue;
      }
      const Vertex a = pick_fresh(s, rng, current_);
      if (a == kNone) throw InternalError(name() + ": no free leaf for star");
      lv[have] = a;
      in_star_[a] = true;
      center_of_leaf_[a] = current_;
      return Choice{Edge(current_, a), "I:x=" + std::to_string(current_)};
    }
  }

  void start_phase_two(const GameState& s, Rng& rng) {
    phase_ = 2;
    std::vector<Vertex> ys;
    for (Vertex v = 0; v < n_; ++v)
      if (!in_star_[v]) ys.push_back(v);
    shuffle_in_place(ys, rng);
    const BipartiteConstruction b = even_cycle_free_bipartite(2 * stars_, k_);
    const std::size_t left = b.left;
    const std::size_t right = b.graph.order() - left;
    if (left > centers_.size() || right > ys.size())
      throw InternalError(name() + ": bipartite target larger than the star layout");
    std::vector<Vertex> lorder(left);
    std::iota(lorder.begin(), lorder.end(), Vertex{0});
    std::stable_sort(lorder.begin(), lorder.end(), [&](Vertex a, Vertex c) {
      return b.graph.degree(a) > b.graph.degree(c);
    });
    std::vector<Vertex> to_board(b.graph.order());
    for (std::size_t i = 0; i < left; ++i) to_board[lorder[i]] = centers_[i];
    for (std::size_t j = 0; j < right; ++j) to_board[left + j] = ys[j];
    std::vector<Edge> edges = b.graph.edges();
    std::stable_sort(edges.begin(), edges.end(), [&](Edge a, Edge c) {
      return b.graph.degree(a.u) > b.graph.degree(c.u);
    });
    for (const Edge& e : edges) b_edges_.emplace_back(to_board[e.u], to_board[e.v]);
    (void)s;
  }

  std::optional<Edge> rescue(const GameState& s, Vertex x, Vertex y) const {
    const auto& lv = leaves_[x];
    if (!is_good_edge(s, lv, x, y, phase2_.count(edge_index(n_, Edge(x, y))) > 0))
      return std::nullopt;
    for (Vertex a : lv)
      if (!s.is_claimed(Edge(a, y))) return Edge(a, y);
    return std::nullopt;
  }

  std::optional<Choice> phase_three(const GameState& s, Rng& rng) {
    // A Blocker move into S_x-y leaves one edge; take it before it is lost.
    if (auto last = detail::last_move_by(s, Player::Blocker)) {
      for (int side = 0; side < 2; ++side) {
        const Vertex a = side ? last->edge.v : last->edge.u;
        const Vertex y = side ? last->edge.u : last->edge.v;
        const Vertex x = center_of_leaf_[a];
        if (x == kNone || in_star_[y]) continue;
        if (auto e = rescue(s, x, y)) return claim(s, *e, "III");
      }
    }
    while (!good_.empty()) {
      const std::size_t i = uniform_below(rng, good_.size());
      const Edge xy = good_[i];
      const Vertex x = in_star_[xy.u] && center_of_leaf_[xy.u] == kNone ? xy.u : xy.v;
      const Vertex y = x == xy.u ? xy.v : xy.u;
      if (auto e = rescue(s, x, y)) {
        const auto& lv = leaves_[x];
        const bool both = !s.is_claimed(Edge(lv[0], y)) && !s.is_claimed(Edge(lv[1], y));
        if (both && uniform_below(rng, 2)) e = Edge(lv[1], y);
        return claim(s, *e, "III");
      }
      good_[i] = good_.back();
      good_.pop_back();
    }
    return std::nullopt;
  }

  Choice claim(const GameState& s, Edge e, const char* tag) const {
    if (!s.constructor_may_claim(e)) throw InternalError(name() + ": Phase III edge would close F");
    return Choice{e, tag};
  }

  std::size_t k_;
  std::size_t n_ = 0;
  std::size_t stars_ = 0;
  int phase_ = 1;
  std::vector<bool> in_star_;
  std::vector<Vertex> center_of_leaf_;
  std::vector<std::array<Vertex, 2>> leaves_;
  std::vector<Vertex> centers_;
  Vertex current_ = kNone;
  std::vector<Edge> b_edges_;
  std::size_t next_b_ = 0;
  std::set<std::uint64_t> phase2_;
  std::vector<Edge> good_;
};

}  // namespace

std::unique_ptr<Strategy> three_phase_constructor(std::size_t k) {
  if (k < 2) throw ConfigError("three-phase needs k >= 2");
  return std::make_unique<ThreePhase>(k);
}

ThreePhaseAudit audit_three_phase(std::size_t n, const std::vector<Move>& moves) {
  ThreePhaseAudit audit;
  std::vector<std::array<Vertex, 2>> leaves(n, {kNone, kNone});
  std::vector<Vertex> center_of_leaf(n, kNone);
  std::vector<int> used(n, 0);
  std::set<std::uint64_t> phase2;
  SimpleGraph c(n), b(n);
  bool counted = false;

  auto count_good = [&]() {
    std::size_t good = 0;
    for (std::uint64_t idx : phase2) {
      const Edge e = edge_at(n, idx);
      const Vertex x = leaves[e.u][0] != kNone ? e.u : e.v;
      const Vertex y = x == e.u ? e.v : e.u;
      if (!c.has_edge(e)) continue;
      bool some_free = false, blocked = false;
      for (Vertex a : leaves[x]) {
        if (a == kNone || c.has_edge(a, y)) blocked = true;
        else some_free |= !b.has_edge(a, y);
      }
      good += some_free && !blocked;
    }
    return good;
  };

  for (const Move& m : moves) {
    if (m.player == Player::Blocker) {
      b.add_edge(m.edge);
      continue;
    }
    const std::string& tag = m.tag;
    if (tag.rfind("I:x=", 0) == 0) {
      ++audit.phase1_rounds;
      const auto x = static_cast<Vertex>(std::stoul(tag.substr(4)));
      const Vertex a = m.edge.u == x ? m.edge.v : m.edge.u;
      auto& lv = leaves[x];
      const int slot = lv[0] == kNone ? 0 : 1;
      if (lv[slot] != kNone) audit.stars_disjoint = false;
      if (slot == 0) {
        if (used[x]++) audit.stars_disjoint = false;
      }
      if (used[a]++) audit.stars_disjoint = false;
      lv[slot] = a;
      center_of_leaf[a] = x;
    } else if (tag == "II") {
      ++audit.phase2_rounds;
      phase2.insert(edge_index(n, m.edge));
    } else if (tag == "III") {
      if (!counted) {
        audit.good_at_phase3 = count_good();
        counted = true;
      }
      ++audit.phase3_rounds;
      bool closes = false;
      for (int side = 0; side < 2 && !closes; ++side) {
        const Vertex a = side ? m.edge.v : m.edge.u;
        const Vertex y = side ? m.edge.u : m.edge.v;
        const Vertex x = center_of_leaf[a];
        closes = x != kNone && c.has_edge(x, a) && phase2.count(edge_index(n, Edge(x, y))) > 0;
      }
      if (!closes) audit.phase3_edges_close_triangles = false;
    }
    c.add_edge(m.edge);
  }
  if (!counted) audit.good_at_phase3 = count_good();
  audit.triangles = count_copies(c, PatternGraph::clique(3)).value;
  return audit;
}

}  // namespace cbgame

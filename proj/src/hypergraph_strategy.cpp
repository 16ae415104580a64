#include <unordered_map>

#include "cbgame/constructions.hpp"
#include "cbgame/errors.hpp"
#include "cbgame/strategies.hpp"
#include "strategy_util.hpp"

namespace cbgame {

const char* status_name(HyperedgeStatus s) {
  switch (s) {
    case HyperedgeStatus::Untouched: return "untouched";
    case HyperedgeStatus::Winning: return "winning";
    case HyperedgeStatus::Won: return "won";
    case HyperedgeStatus::Lost: return "lost";
  }
  return "?";
}

std::array<Vertex, 5> hyperedge_vertices(const Hypergraph5& h, std::size_t e) {
  std::array<Vertex, 5> out{};
  for (std::size_t j = 0; j < 5; ++j) out[j] = static_cast<Vertex>(h.vertex_id(j, h.edges[e][j]));
  return out;
}

namespace {

struct LocalCounts {
  std::size_t c = 0, b = 0;
  bool triangle = false;
};

LocalCounts local_counts(const GameState& state, const std::array<Vertex, 5>& e) {
  const SimpleGraph& cg = state.constructor_graph();
  const SimpleGraph& bg = state.blocker_graph();
  LocalCounts out;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      out.c += cg.has_edge(e[i], e[j]);
      out.b += bg.has_edge(e[i], e[j]);
      for (std::size_t k = j + 1; k < 5 && !out.triangle; ++k)
        out.triangle = cg.has_edge(e[i], e[j]) && cg.has_edge(e[j], e[k]) &&
                       cg.has_edge(e[i], e[k]);
    }
  return out;
}

}  // namespace

HyperedgeStatus classify_hyperedge(const GameState& state, const std::array<Vertex, 5>& e) {
  const LocalCounts lc = local_counts(state, e);
  if (lc.triangle) return HyperedgeStatus::Won;
  if (lc.c > lc.b) return HyperedgeStatus::Winning;
  if (lc.c + lc.b == 0) return HyperedgeStatus::Untouched;
  return HyperedgeStatus::Lost;
}

const PolicyTable& triangle_policy_k5() {
  static const PolicyTable table = [] {
    PolicyResult r = derive_policy(5, PatternGraph::clique(3), PatternGraph::cycle(4),
                                   PolicyObjective{1, true});
    if (!r.achieved) throw InternalError("no pass-tolerant triangle policy on K5");
    return std::move(r.table);
  }();
  return table;
}

namespace {

class HypergraphConstructor : public Strategy {
 public:
  HypergraphConstructor(std::size_t k, std::optional<Hypergraph5> h, PolicyTable policy)
      : k_(k), fixed_(std::move(h)), policy_(std::move(policy)) {}

  std::string name() const override {
    return fixed_ ? "hypergraph:explicit" : "hypergraph:k=" + std::to_string(k_);
  }
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<HypergraphConstructor>(k_, fixed_, policy_);
  }

  void reset(const GameState& s, Rng&) override {
    const PatternGraph& f = s.forbidden();
    if (!(f.kind() == PatternGraph::Kind::Cycle && f.first() == 4) &&
        !(f.kind() == PatternGraph::Kind::CompleteBipartite && f.first() == 2 && f.second() == 2))
      throw ConfigError(name() + " needs F = C4, got " + f.spec());
    if (policy_.n() != 5) throw ConfigError(name() + ": policy must live on K5");
    if (fixed_) {
      h_ = *fixed_;
    } else {
      const std::size_t n = s.n();
      const auto p = static_cast<std::int64_t>(n / 5);
      if (n % 5 != 0 || !is_prime(static_cast<std::uint64_t>(p)) ||
          p <= static_cast<std::int64_t>(k_))
        throw ConfigError(name() + " needs n = 5p with p a prime > k");
      // Pure greedy: backtracking at this fold is far too slow to pay off.
      const KFoldSidonSet a =
          k_fold_sidon_greedy(p, static_cast<std::int64_t>(k_), static_cast<std::size_t>(p), 0);
      h_ = hypergraph_from_sidon(a, kDefaultSidonB, p);
    }
    if (s.n() < 5 * static_cast<std::size_t>(h_.n))
      throw ConfigError(name() + ": board smaller than the hypergraph");
    n_ = s.n();
    verts_.clear();
    owner_.clear();
    for (std::size_t e = 0; e < h_.edges.size(); ++e) {
      verts_.push_back(hyperedge_vertices(h_, e));
      const auto& v = verts_.back();
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
          owner_.emplace(edge_index(n_, Edge(v[i], v[j])), static_cast<std::uint32_t>(e));
    }
    untouched_.resize(h_.edges.size());
    for (std::size_t e = 0; e < untouched_.size(); ++e) untouched_[e] = static_cast<std::uint32_t>(e);
    active_.clear();
    in_active_.assign(h_.edges.size(), false);
  }

  Decision choose(const GameState& s, Rng& rng) override {
    // S1: Blocker answered inside a hyperedge that was winning before.
    if (auto last = detail::last_move_by(s, Player::Blocker)) {
      const auto it = owner_.find(edge_index(n_, last->edge));
      if (it != owner_.end()) {
        const LocalCounts lc = local_counts(s, verts_[it->second]);
        if (!lc.triangle && lc.c >= lc.b) return play_in(s, it->second, "S1");
      }
    }
    // S2: open a fresh hyperedge.
    while (!untouched_.empty()) {
      const std::size_t i = uniform_below(rng, untouched_.size());
      const std::uint32_t e = untouched_[i];
      untouched_[i] = untouched_.back();
      untouched_.pop_back();
      if (classify_hyperedge(s, verts_[e]) == HyperedgeStatus::Untouched) return play_in(s, e, "S2");
    }
    // S3: advance a winning hyperedge as though Blocker had passed there.
    while (!active_.empty()) {
      const std::size_t i = uniform_below(rng, active_.size());
      const std::uint32_t e = active_[i];
      if (classify_hyperedge(s, verts_[e]) == HyperedgeStatus::Winning) return play_in(s, e, "S3");
      active_[i] = active_.back();
      active_.pop_back();
      in_active_[e] = false;
    }
    return PlanComplete{"every hyperedge won or lost"};
  }

 private:
  Choice play_in(const GameState& s, std::uint32_t e, const char* rule) {
    const auto& v = verts_[e];
    SimpleGraph lc(5), lb(5);
    for (Vertex i = 0; i < 5; ++i)
      for (Vertex j = i + 1; j < 5; ++j) {
        if (s.constructor_graph().has_edge(v[i], v[j])) lc.add_edge(i, j);
        if (s.blocker_graph().has_edge(v[i], v[j])) lb.add_edge(i, j);
      }
    const auto local = policy_.lookup(lc, lb);
    if (!local) throw InternalError(name() + ": policy has no move for hyperedge " + std::to_string(e));
    const Edge move(v[local->u], v[local->v]);
    if (!s.constructor_may_claim(move))
      throw InternalError(name() + ": policy move is not legal on the board");
    if (!in_active_[e]) {
      in_active_[e] = true;
      active_.push_back(e);
    }
    return Choice{move, std::string(rule) + ":e=" + std::to_string(e)};
  }

  std::size_t k_;
  std::optional<Hypergraph5> fixed_;
  PolicyTable policy_;
  Hypergraph5 h_;
  std::size_t n_ = 0;
  std::vector<std::array<Vertex, 5>> verts_;
  std::unordered_map<std::uint64_t, std::uint32_t> owner_;
  std::vector<std::uint32_t> untouched_;
  std::vector<std::uint32_t> active_;
  std::vector<bool> in_active_;
};

}  // namespace

std::unique_ptr<Strategy> hypergraph_constructor(std::size_t k) {
  return std::make_unique<HypergraphConstructor>(k, std::nullopt, triangle_policy_k5());
}

std::unique_ptr<Strategy> hypergraph_constructor(Hypergraph5 h, PolicyTable policy) {
  return std::make_unique<HypergraphConstructor>(0, std::move(h), std::move(policy));
}

}  // namespace cbgame

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cbgame/errors.hpp"
#include "cbgame/strategies.hpp"
#include "strategy_util.hpp"

namespace cbgame {

JumbleFrame JumbleFrame::whole(std::size_t n) {
  JumbleFrame f;
  f.left.resize(n);
  std::iota(f.left.begin(), f.left.end(), Vertex{0});
  return f;
}

JumbleFrame JumbleFrame::between(std::vector<Vertex> a, std::vector<Vertex> b) {
  JumbleFrame f;
  f.left = std::move(a);
  f.right = std::move(b);
  f.bipartite = true;
  return f;
}

double jumbleg_epsilon(std::size_t n, std::size_t parts) {
  const double x = static_cast<double>(n);
  return 2.0 * static_cast<double>(parts) * std::cbrt(std::log(x) / x);
}

std::vector<std::vector<Vertex>> random_equipartition(std::size_t n, std::size_t parts, Rng& rng) {
  if (parts == 0 || parts > n) throw ConfigError("cannot split " + std::to_string(n) +
                                                 " vertices into " + std::to_string(parts) +
                                                 " nonempty parts");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  shuffle_in_place(order, rng);
  std::vector<std::vector<Vertex>> out(parts);
  for (std::size_t i = 0; i < n; ++i) out[i % parts].push_back(order[i]);
  for (auto& p : out) std::sort(p.begin(), p.end());
  return out;
}

std::optional<Edge> jumbleg_maker_move(const JumbleFrame& frame, const SimpleGraph& maker,
                                       const SimpleGraph& breaker, Rng& rng) {
  const std::size_t n = maker.order();
  const std::size_t words = maker.words();
  std::vector<std::uint64_t> left_mask(words, 0), right_mask(words, 0);
  for (Vertex v : frame.left) bits::set(left_mask, v);
  for (Vertex v : frame.right) bits::set(right_mask, v);
  auto partners = [&](Vertex v) -> const std::vector<std::uint64_t>& {
    if (!frame.bipartite) return left_mask;
    return bits::test(left_mask, v) ? right_mask : left_mask;
  };
  std::vector<std::uint64_t> free_row(words);
  auto load_free = [&](Vertex v) {
    const auto& p = partners(v);
    const auto mr = maker.row(v);
    const auto br = breaker.row(v);
    for (std::size_t w = 0; w < words; ++w) free_row[w] = p[w] & ~mr[w] & ~br[w];
    bits::reset(free_row, v);
  };
  auto maker_degree = [&](Vertex v) { return bits::count_and(maker.row(v), partners(v)); };

  // Vertex with the smallest Maker degree among those with free pairs.
  std::optional<Vertex> u;
  std::size_t best_deg = 0, best_free = 0, ties = 0;
  auto consider = [&](Vertex v) {
    load_free(v);
    const std::size_t free_count = bits::count(free_row);
    if (free_count == 0) return;
    const std::size_t d = maker_degree(v);
    if (!u || d < best_deg || (d == best_deg && free_count < best_free)) {
      u = v;
      best_deg = d;
      best_free = free_count;
      ties = 1;
    } else if (d == best_deg && free_count == best_free) {
      if (uniform_below(rng, ++ties) == 0) u = v;
    }
  };
  for (Vertex v : frame.left) consider(v);
  for (Vertex v : frame.right) consider(v);
  if (!u) return std::nullopt;

  load_free(*u);
  std::vector<Vertex> cand;
  bits::for_each(free_row, [&](Vertex v) { cand.push_back(v); });
  const std::size_t take = std::min<std::size_t>(16, cand.size());
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + uniform_below(rng, cand.size() - i);
    std::swap(cand[i], cand[j]);
  }
  Vertex best = cand[0];
  std::size_t bd = SIZE_MAX, bc = SIZE_MAX;
  for (std::size_t i = 0; i < take; ++i) {
    const Vertex v = cand[i];
    const std::size_t d = maker_degree(v);
    const std::size_t c = bits::count_and(maker.row(*u), maker.row(v));
    if (d < bd || (d == bd && c < bc)) {
      best = v;
      bd = d;
      bc = c;
    }
  }
  (void)n;
  return Edge(*u, best);
}

SimpleGraph simulate_jumbleg(std::size_t n, const JumbleFrame& frame, std::uint64_t seed,
                             bool maker_first) {
  Rng rng(seed);
  SimpleGraph maker(n), breaker(n);
  std::vector<Edge> pool;
  if (frame.bipartite) {
    for (Vertex a : frame.left)
      for (Vertex b : frame.right) pool.emplace_back(a, b);
  } else {
    for (std::size_t i = 0; i < frame.left.size(); ++i)
      for (std::size_t j = i + 1; j < frame.left.size(); ++j)
        pool.emplace_back(frame.left[i], frame.left[j]);
  }
  std::vector<std::size_t> pos(pair_count(n), SIZE_MAX);
  for (std::size_t i = 0; i < pool.size(); ++i) pos[edge_index(n, pool[i])] = i;
  auto remove = [&](Edge e) {
    const std::size_t i = pos[edge_index(n, e)];
    const Edge last = pool.back();
    pool[i] = last;
    pos[edge_index(n, last)] = i;
    pool.pop_back();
    pos[edge_index(n, e)] = SIZE_MAX;
  };
  bool maker_turn = maker_first;
  while (!pool.empty()) {
    if (maker_turn) {
      const auto e = jumbleg_maker_move(frame, maker, breaker, rng);
      if (!e) break;
      maker.add_edge(*e);
      remove(*e);
    } else {
      const Edge e = pool[uniform_below(rng, pool.size())];
      breaker.add_edge(e);
      remove(e);
    }
    maker_turn = !maker_turn;
  }
  return maker;
}

namespace {

/// JumbleG Maker on designated pairs of parts; shared by the partite and the
/// cyclic blow-up constructors.
class PairFrameConstructor : public Strategy {
 public:
  enum class Layout { Complete, Cycle };

  PairFrameConstructor(std::string name, std::size_t parts, Layout layout, std::size_t param)
      : name_(std::move(name)), parts_(parts), layout_(layout), param_(param) {}

  std::string name() const override { return name_; }

  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<PairFrameConstructor>(name_, parts_, layout_, param_);
  }

  void reset(const GameState& s, Rng& rng) override {
    const std::size_t n = s.n();
    const PatternGraph& f = s.forbidden();
    if (layout_ == Layout::Complete) {
      if (f.chromatic_number() <= parts_)
        throw ConfigError(name_ + " needs chi(F) > " + std::to_string(parts_) + ", F=" + f.spec());
    } else {
      const bool triangle = f.vertex_count() == 3 && f.edge_count() == 3;
      if (!triangle) throw ConfigError(name_ + " needs F = triangle, got " + f.spec());
    }
    parts = random_equipartition(n, parts_, rng);
    part_of_.assign(n, 0);
    for (std::size_t p = 0; p < parts_; ++p)
      for (Vertex v : parts[p]) part_of_[v] = p;
    pairs_.clear();
    pair_id_.assign(parts_ * parts_, SIZE_MAX);
    auto add = [&](std::size_t i, std::size_t j) {
      if (i > j) std::swap(i, j);
      pair_id_[i * parts_ + j] = pair_id_[j * parts_ + i] = pairs_.size();
      pairs_.push_back({i, j});
    };
    if (layout_ == Layout::Complete) {
      for (std::size_t i = 0; i < parts_; ++i)
        for (std::size_t j = i + 1; j < parts_; ++j) add(i, j);
    } else {
      for (std::size_t i = 0; i < parts_; ++i) add(i, (i + 1) % parts_);
    }
    unclaimed_.clear();
    for (const auto& [i, j] : pairs_) unclaimed_.push_back(parts[i].size() * parts[j].size());
    seen_ = 0;
    eps_ = jumbleg_epsilon(n, parts_);
  }

  Decision choose(const GameState& s, Rng& rng) override {
    const auto& hist = s.history();
    for (; seen_ < hist.size(); ++seen_) {
      const std::size_t id = pair_of(hist[seen_].edge);
      if (id != SIZE_MAX) --unclaimed_[id];
    }
    std::size_t target = SIZE_MAX;
    if (auto last = detail::last_move_by(s, Player::Blocker)) {
      const std::size_t id = pair_of(last->edge);
      if (id != SIZE_MAX && unclaimed_[id] > 0) target = id;
    }
    if (target == SIZE_MAX) {
      std::size_t most = 0;
      for (std::size_t id = 0; id < pairs_.size(); ++id)
        if (unclaimed_[id] > most) {
          most = unclaimed_[id];
          target = id;
        }
    }
    if (target == SIZE_MAX) return PlanComplete{"all designated pairs claimed"};
    const auto [i, j] = pairs_[target];
    const JumbleFrame frame = JumbleFrame::between(parts[i], parts[j]);
    const auto e = jumbleg_maker_move(frame, s.constructor_graph(), s.blocker_graph(), rng);
    if (!e) throw InternalError(name_ + ": pair bookkeeping out of sync");
    std::ostringstream tag;
    tag << "pair=" << i << '-' << j;
    if (s.history().empty()) tag << ";eps=" << eps_;
    return Choice{*e, tag.str()};
  }

  std::vector<std::vector<Vertex>> parts;

 private:
  std::size_t pair_of(Edge e) const {
    const std::size_t a = part_of_[e.u], b = part_of_[e.v];
    if (a == b) return SIZE_MAX;
    return pair_id_[a * parts_ + b];
  }

  std::string name_;
  std::size_t parts_;
  Layout layout_;
  std::size_t param_;
  std::vector<std::size_t> part_of_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> pair_id_;
  std::vector<std::uint64_t> unclaimed_;
  std::size_t seen_ = 0;
  double eps_ = 0;
};

class RandomStrategy : public Strategy {
 public:
  std::string name() const override { return "random"; }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<RandomStrategy>(); }

  Decision choose(const GameState& s, Rng& rng) override {
    std::optional<Edge> e;
    if (s.to_move() == Player::Constructor)
      e = detail::sample_pair(s.n(), rng, [&](Edge x) { return s.constructor_may_claim(x); });
    else
      e = detail::sample_pair(s.n(), rng, [&](Edge x) { return !s.is_claimed(x); });
    if (!e) return Pass{};
    return Choice{*e, ""};
  }
};

class JumbleGBlocker : public Strategy {
 public:
  std::string name() const override { return "jumbleg-blocker"; }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<JumbleGBlocker>(); }

  void reset(const GameState& s, Rng&) override { frame_ = JumbleFrame::whole(s.n()); }

  Decision choose(const GameState& s, Rng& rng) override {
    const auto e = jumbleg_maker_move(frame_, s.blocker_graph(), s.constructor_graph(), rng);
    if (!e) return Pass{};
    return Choice{*e, "maker"};
  }

 private:
  JumbleFrame frame_;
};

}  // namespace

std::unique_ptr<Strategy> partite_jumbleg_constructor(std::size_t s) {
  if (s < 3) throw ConfigError("partite-jumbleg needs s >= 3");
  return std::make_unique<PairFrameConstructor>("partite-jumbleg:s=" + std::to_string(s), s - 1,
                                                PairFrameConstructor::Layout::Complete, s);
}

std::unique_ptr<Strategy> blowup_cycle_constructor(std::size_t k) {
  if (k < 2) throw ConfigError("blowup-cycle needs k >= 2");
  return std::make_unique<PairFrameConstructor>("blowup-cycle:k=" + std::to_string(k), 2 * k + 1,
                                                PairFrameConstructor::Layout::Cycle, k);
}

std::unique_ptr<Strategy> random_strategy() { return std::make_unique<RandomStrategy>(); }

std::unique_ptr<Strategy> jumbleg_blocker() { return std::make_unique<JumbleGBlocker>(); }

}  // namespace cbgame

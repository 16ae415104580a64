#include <algorithm>

#include "cbgame/errors.hpp"
#include "cbgame/strategies.hpp"

namespace cbgame {
namespace {

constexpr Vertex kNone = ~Vertex{0};

class HalfBlowupConstructor : public Strategy {
 public:
  HalfBlowupConstructor(std::size_t l, std::size_t k) : l_(l), k_(k) {}

  std::string name() const override {
    return "half-blowup:l=" + std::to_string(l_) + ",k=" + std::to_string(k_);
  }
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<HalfBlowupConstructor>(l_, k_);
  }

  void reset(const GameState& s, Rng&) override {
    const PatternGraph& f = s.forbidden();
    if (f.kind() != PatternGraph::Kind::Cycle || f.first() != 2 * k_ + 1)
      throw ConfigError(name() + " needs F = C" + std::to_string(2 * k_ + 1) + ", got " + f.spec());
    n_ = s.n();
    star_ = 2 * n_ / (15 * l_);
    fill_ = n_ / (15 * l_);
    if (fill_ < 2) throw ConfigError(name() + ": n too small for the phase budget");
    phase_ = 1;
    step_ = Step::Star;
    hub_.assign(l_ + 1, kNone);
    leaves_.clear();
    filled_ = 0;
  }

  Decision choose(const GameState& s, Rng& rng) override {
    if (hub_[0] == kNone) hub_[0] = fresh(s, rng);
    while (phase_ <= l_) {
      const std::string tag = "P" + std::to_string(phase_) + ":";
      const Vertex center = hub_[phase_ - 1];
      switch (step_) {
        case Step::Star:
          if (leaves_.size() < star_) {
            const Vertex a = fresh(s, rng);
            leaves_.push_back(a);
            return claim(s, Edge(center, a), tag + "star");
          }
          hub_[phase_] = fresh(s, rng);
          filled_ = 0;
          step_ = phase_ == l_ ? Step::Close : Step::Fill;
          break;
        case Step::Close:
          step_ = Step::Fill;
          return claim(s, Edge(hub_[0], hub_[l_]), tag + "close");
        case Step::Fill: {
          const std::size_t want = phase_ == l_ ? fill_ - 1 : fill_;
          if (filled_ < want) {
            const Vertex v = hub_[phase_];
            std::vector<Vertex> open;
            for (Vertex a : leaves_)
              if (!s.is_claimed(Edge(v, a))) open.push_back(a);
            if (open.empty()) throw InternalError(name() + ": leaf set exhausted");
            ++filled_;
            return claim(s, Edge(v, open[uniform_below(rng, open.size())]), tag + "fill");
          }
          ++phase_;
          leaves_.clear();
          step_ = Step::Star;
          break;
        }
      }
    }
    return PlanComplete{"all phases played"};
  }

 private:
  enum class Step { Star, Close, Fill };

  // Uniform among vertices no player has touched.
  Vertex fresh(const GameState& s, Rng& rng) const {
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n_; ++v)
      if (s.constructor_graph().degree(v) == 0 && s.blocker_graph().degree(v) == 0 &&
          std::find(hub_.begin(), hub_.end(), v) == hub_.end())
        pool.push_back(v);
    if (pool.empty()) throw InternalError(name() + ": no new vertex left");
    return pool[uniform_below(rng, pool.size())];
  }

  Choice claim(const GameState& s, Edge e, std::string tag) const {
    if (!s.constructor_may_claim(e)) throw InternalError(name() + ": planned edge is not legal");
    return Choice{e, std::move(tag)};
  }

  std::size_t l_, k_;
  std::size_t n_ = 0;
  std::size_t star_ = 0, fill_ = 0;
  std::size_t phase_ = 1;
  Step step_ = Step::Star;
  std::vector<Vertex> hub_;
  std::vector<Vertex> leaves_;
  std::size_t filled_ = 0;
};

}  // namespace

std::unique_ptr<Strategy> half_blowup_constructor(std::size_t l, std::size_t k) {
  if (l < 2 || k <= l) throw ConfigError("half-blowup needs k > l >= 2");
  return std::make_unique<HalfBlowupConstructor>(l, k);
}

}  // namespace cbgame

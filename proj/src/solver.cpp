#include "cbgame/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "cbgame/counting.hpp"
#include "cbgame/errors.hpp"

namespace cbgame {

// Precomputed copies of H and F inside K_n as pair masks.
struct BoardModel {
  std::size_t n = 0;
  std::size_t pairs = 0;
  std::uint32_t full = 0;
  std::vector<std::uint32_t> h_masks;
  std::vector<std::vector<std::uint32_t>> f_rest;  // per pair: F-copy minus that pair
  std::vector<Edge> pair_edge;

  BoardModel(std::size_t order, const PatternGraph& h, const PatternGraph& f) : n(order) {
    if (n > kMaxSolverOrder)
      throw CapabilityError("exact search supports n <= " + std::to_string(kMaxSolverOrder));
    pairs = pair_count(n);
    full = pairs == 32 ? ~0U : ((1U << pairs) - 1);
    for (std::uint64_t i = 0; i < pairs; ++i) pair_edge.push_back(edge_at(n, i));
    const SimpleGraph kn = SimpleGraph::complete(n);
    auto to_mask = [&](const std::vector<Edge>& copy) {
      std::uint32_t m = 0;
      for (const Edge& e : copy) m |= 1U << edge_index(n, e);
      return m;
    };
    if (h.vertex_count() <= n)
      for (const auto& copy : enumerate_copies(kn, h.graph())) h_masks.push_back(to_mask(copy));
    f_rest.resize(pairs);
    if (f.vertex_count() <= n)
      for (const auto& copy : enumerate_copies(kn, f.graph())) {
        const std::uint32_t m = to_mask(copy);
        for (std::uint32_t rest = m; rest; rest &= rest - 1) {
          const int p = std::countr_zero(rest);
          f_rest[static_cast<std::size_t>(p)].push_back(m & ~(1U << p));
        }
      }
  }

  std::uint32_t mask_of(const SimpleGraph& g) const {
    std::uint32_t m = 0;
    for (const Edge& e : g.edges()) m |= 1U << edge_index(n, e);
    return m;
  }

  bool legal_for_constructor(std::uint32_t c, int p) const {
    for (std::uint32_t rest : f_rest[static_cast<std::size_t>(p)])
      if ((rest & ~c) == 0) return false;
    return true;
  }

  /// Unclaimed pairs that Constructor may still claim.
  std::uint32_t available(std::uint32_t c, std::uint32_t candidates) const {
    std::uint32_t out = 0;
    for (std::uint32_t rest = candidates; rest; rest &= rest - 1) {
      const int p = std::countr_zero(rest);
      if (legal_for_constructor(c, p)) out |= 1U << p;
    }
    return out;
  }

  std::int64_t score(std::uint32_t c) const {
    std::int64_t s = 0;
    for (std::uint32_t m : h_masks) s += (m & ~c) == 0;
    return s;
  }

  PositionKey key(std::uint32_t c, std::uint32_t avail, Player side) const {
    std::vector<std::uint8_t> colors(n * n, 0);
    for (std::size_t p = 0; p < pairs; ++p) {
      const std::uint8_t k = (c >> p) & 1U ? 1 : ((avail >> p) & 1U ? 2 : 0);
      const Edge e = pair_edge[p];
      colors[e.u * n + e.v] = colors[e.v * n + e.u] = k;
    }
    Canonical canon = canonical_form(n, colors);
    PositionKey out;
    out.key = static_cast<std::uint64_t>(canon.code) * 2 + (side == Player::Blocker ? 1 : 0);
    out.label = std::move(canon.label);
    return out;
  }
};

namespace {

struct BudgetExhausted {};

constexpr std::int64_t kInf = std::numeric_limits<std::int32_t>::max();

struct Bounds {
  std::int32_t lo;
  std::int32_t hi;
};

/// Transposition store shared by all search threads.
class ShardedTable {
 public:
  std::optional<Bounds> find(std::uint64_t key) const {
    const auto& s = shard(key);
    std::lock_guard lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  void tighten(std::uint64_t key, std::int64_t lo, std::int64_t hi) {
    auto& s = shard(key);
    std::lock_guard lock(s.mu);
    auto [it, fresh] = s.map.try_emplace(key, Bounds{static_cast<std::int32_t>(lo),
                                                     static_cast<std::int32_t>(hi)});
    if (!fresh) {
      it->second.lo = std::max<std::int32_t>(it->second.lo, static_cast<std::int32_t>(lo));
      it->second.hi = std::min<std::int32_t>(it->second.hi, static_cast<std::int32_t>(hi));
    }
  }

  std::uint64_t size() const {
    std::uint64_t total = 0;
    for (const auto& s : shards_) {
      std::lock_guard lock(s.mu);
      total += s.map.size();
    }
    return total;
  }

 private:
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<std::uint64_t, Bounds> map;
  };
  static constexpr std::size_t kShards = 64;
  Shard& shard(std::uint64_t key) { return shards_[(key * 0x9e3779b97f4a7c15ULL) >> 58]; }
  const Shard& shard(std::uint64_t key) const {
    return shards_[(key * 0x9e3779b97f4a7c15ULL) >> 58];
  }
  std::array<Shard, kShards> shards_;
};

struct Child {
  std::uint32_t c;
  std::uint32_t avail;
  std::int64_t optimistic;
  std::uint64_t key;
};

class Searcher {
 public:
  Searcher(const BoardModel& board, ShardedTable& table, std::atomic<std::uint64_t>& nodes,
           std::uint64_t budget)
      : board_(board), table_(table), nodes_(nodes), budget_(budget) {}

  // Children after the side to move claims one available pair. Blocker
  // claiming a pair Constructor could never use is never better for Blocker
  // than claiming an available one, so such moves are not generated.
  std::vector<Child> children(std::uint32_t c, std::uint32_t avail, Player side) const {
    std::vector<Child> out;
    std::unordered_set<std::uint64_t> seen;
    for (std::uint32_t rest = avail; rest; rest &= rest - 1) {
      const int p = std::countr_zero(rest);
      const std::uint32_t bit = 1U << p;
      Child ch{};
      if (side == Player::Constructor) {
        ch.c = c | bit;
        ch.avail = board_.available(ch.c, avail & ~bit);
      } else {
        ch.c = c;
        ch.avail = avail & ~bit;
      }
      ch.key = board_.key(ch.c, ch.avail, other(side)).key;
      if (!seen.insert(ch.key).second) continue;
      ch.optimistic = board_.score(ch.c | ch.avail);
      out.push_back(ch);
    }
    if (side == Player::Constructor)
      std::stable_sort(out.begin(), out.end(),
                       [](const Child& a, const Child& b) { return a.optimistic > b.optimistic; });
    else
      std::stable_sort(out.begin(), out.end(),
                       [](const Child& a, const Child& b) { return a.optimistic < b.optimistic; });
    return out;
  }

  std::int64_t search(std::uint32_t c, std::uint32_t avail, Player side, std::uint64_t key,
                      std::int64_t alpha, std::int64_t beta) {
    if (budget_ && nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_)
      throw BudgetExhausted{};
    if (!budget_) nodes_.fetch_add(1, std::memory_order_relaxed);
    std::int64_t lo = board_.score(c);
    if (!avail) return lo;
    std::int64_t hi = board_.score(c | avail);
    if (lo == hi) return lo;
    if (auto e = table_.find(key)) {
      lo = std::max<std::int64_t>(lo, e->lo);
      hi = std::min<std::int64_t>(hi, e->hi);
      if (lo >= hi) return lo;
    }
    if (lo >= beta) return lo;
    if (hi <= alpha) return hi;
    const std::int64_t a0 = std::max(alpha, lo);
    const std::int64_t b0 = std::min(beta, hi);
    std::int64_t a = a0, b = b0;
    const bool maximize = side == Player::Constructor;
    std::int64_t best = maximize ? -kInf : kInf;
    for (const Child& ch : children(c, avail, side)) {
      const std::int64_t v = search(ch.c, ch.avail, other(side), ch.key, a, b);
      if (maximize) {
        best = std::max(best, v);
        a = std::max(a, v);
      } else {
        best = std::min(best, v);
        b = std::min(b, v);
      }
      if (a >= b) break;
    }
    if (best <= a0)
      table_.tighten(key, lo, best);
    else if (best >= b0)
      table_.tighten(key, best, hi);
    else
      table_.tighten(key, best, best);
    return best;
  }

 private:
  const BoardModel& board_;
  ShardedTable& table_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
};

}  // namespace

SolveResult exact_game_value(std::size_t n, const PatternGraph& h, const PatternGraph& f,
                             const SolveOptions& options) {
  const BoardModel board(n, h, f);
  ShardedTable table;
  std::atomic<std::uint64_t> nodes{0};
  SolveResult result;
  const std::uint32_t avail = board.available(0, board.full);
  const std::uint64_t root_key = board.key(0, avail, Player::Constructor).key;
  result.lower = board.score(0);
  result.upper = board.score(avail);
  if (!avail || result.lower == result.upper) {
    result.upper = result.lower;
    result.exact = true;
    return result;
  }

  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    Searcher s(board, table, nodes, options.budget);
    try {
      const auto v = s.search(0, avail, Player::Constructor, root_key, -kInf, kInf);
      result.lower = result.upper = v;
      result.exact = true;
    } catch (const BudgetExhausted&) {
    }
  } else {
    // Root split: each worker takes whole root children and solves them with
    // a full window, sharing the transposition store.
    Searcher root(board, table, nodes, 0);
    const auto kids = root.children(0, avail, Player::Constructor);
    std::vector<std::int64_t> values(kids.size(), -kInf);
    std::vector<char> done(kids.size(), 0);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        Searcher s(board, table, nodes, options.budget);
        for (std::size_t i; (i = next.fetch_add(1)) < kids.size();) {
          try {
            values[i] = s.search(kids[i].c, kids[i].avail, Player::Blocker, kids[i].key, -kInf,
                                 kInf);
            done[i] = 1;
          } catch (const BudgetExhausted&) {
          }
        }
      });
    for (auto& th : pool) th.join();
    const bool all = std::all_of(done.begin(), done.end(), [](char d) { return d != 0; });
    std::int64_t best = -kInf;
    for (std::size_t i = 0; i < kids.size(); ++i)
      if (done[i]) best = std::max(best, values[i]);
    if (all) {
      result.lower = result.upper = best;
      result.exact = true;
      table.tighten(root_key, best, best);
    } else {
      result.lower = std::max(result.lower, best);
    }
  }
  if (!result.exact) {
    if (auto e = table.find(root_key)) {
      result.lower = std::max<std::int64_t>(result.lower, e->lo);
      result.upper = std::min<std::int64_t>(result.upper, e->hi);
    }
    result.exact = result.lower == result.upper;
  }
  result.nodes = nodes.load();
  result.stored = table.size();
  return result;
}

PositionKey position_key(std::size_t n, const PatternGraph& f, const SimpleGraph& constructor,
                         const SimpleGraph& blocker, Player to_move) {
  const BoardModel board(n, PatternGraph::clique(2), f);
  const std::uint32_t c = board.mask_of(constructor);
  const std::uint32_t b = board.mask_of(blocker);
  return board.key(c, board.available(c, board.full & ~c & ~b), to_move);
}

// ------------------------------------------------------------ policies

PolicyTable::PolicyTable(std::size_t n, PatternGraph h, PatternGraph f, PolicyObjective objective)
    : n_(n), h_(std::move(h)), f_(std::move(f)), objective_(objective),
      board_(std::make_shared<BoardModel>(n, *h_, *f_)) {}

std::string PolicyTable::guarantee() const {
  if (!h_) return "empty policy";
  std::ostringstream os;
  os << "score >= " << objective_.min_score << " copies of " << h_->spec()
     << ", Constructor graph " << f_->spec() << "-free at all times, n=" << n_
     << (objective_.blocker_may_pass ? ", Blocker may pass" : "");
  return os.str();
}

std::optional<Edge> PolicyTable::lookup(const SimpleGraph& constructor,
                                        const SimpleGraph& blocker) const {
  if (!board_) return std::nullopt;
  const std::uint32_t c = board_->mask_of(constructor);
  const std::uint32_t b = board_->mask_of(blocker);
  const std::uint32_t avail = board_->available(c, board_->full & ~c & ~b);
  const PositionKey k = board_->key(c, avail, Player::Constructor);
  auto it = moves_.find(k.key);
  if (it == moves_.end()) return std::nullopt;
  std::vector<Vertex> vertex_of(n_);
  for (std::size_t v = 0; v < n_; ++v) vertex_of[k.label[v]] = static_cast<Vertex>(v);
  return Edge(vertex_of[it->second.u], vertex_of[it->second.v]);
}

void PolicyTable::write(std::ostream& os) const {
  os << "# policy n=" << n_ << " H=" << (h_ ? h_->spec() : "") << " F=" << (f_ ? f_->spec() : "")
     << " min_score=" << objective_.min_score
     << " blocker_may_pass=" << (objective_.blocker_may_pass ? 1 : 0) << '\n';
  os << "# guarantee: " << guarantee() << '\n';
  for (const auto& [key, e] : moves_) os << std::hex << key << std::dec << ' ' << e.u << ' ' << e.v << '\n';
}

PolicyTable PolicyTable::read(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || !line.starts_with("# policy "))
    throw InputError("policy file: missing header");
  std::istringstream head(line.substr(9));
  std::size_t n = 0;
  std::string h, f;
  PolicyObjective obj;
  std::string token;
  while (head >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw InputError("policy file: bad header token " + token);
    const auto name = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    if (name == "n") n = std::stoul(value);
    else if (name == "H") h = value;
    else if (name == "F") f = value;
    else if (name == "min_score") obj.min_score = std::stoull(value);
    else if (name == "blocker_may_pass") obj.blocker_may_pass = value == "1";
  }
  PolicyTable table(n, PatternGraph::parse(h), PatternGraph::parse(f), obj);
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream rec(line);
    std::uint64_t key = 0;
    Vertex u = 0, v = 0;
    if (!(rec >> std::hex >> key >> std::dec >> u >> v) || u == v || u >= n || v >= n)
      throw InputError("policy file: bad record '" + line + "'");
    table.insert(key, Edge(u, v));
  }
  return table;
}

namespace {

class PolicySolver {
 public:
  PolicySolver(const BoardModel& board, const PolicyObjective& obj) : board_(board), obj_(obj) {}

  bool win(std::uint32_t c, std::uint32_t avail, bool dead_unclaimed, Player side) {
    const auto target = static_cast<std::int64_t>(obj_.min_score);
    if (board_.score(c) >= target) return true;
    if (!avail || board_.score(c | avail) < target) return false;
    const auto k = board_.key(c, avail, side);
    const std::uint64_t memo_key = k.key * 2 + (dead_unclaimed ? 1 : 0);
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;
    bool result;
    if (side == Player::Constructor) {
      result = false;
      for (std::uint32_t rest = avail; rest && !result; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        const std::uint32_t nc = c | bit;
        const std::uint32_t na = board_.available(nc, avail & ~bit);
        // Pairs that just became illegal are now dead and unclaimed.
        const bool dead = dead_unclaimed || (avail & ~bit & ~na) != 0;
        result = win(nc, na, dead, Player::Blocker);
      }
    } else {
      result = true;
      if (dead_unclaimed || obj_.blocker_may_pass)
        result = win(c, avail, dead_unclaimed, Player::Constructor);
      for (std::uint32_t rest = avail; rest && result; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        result = win(c, avail & ~bit, dead_unclaimed, Player::Constructor);
      }
    }
    ++decided_;
    memo_.emplace(memo_key, result);
    return result;
  }

  std::uint64_t decided() const { return decided_; }

 private:
  const BoardModel& board_;
  PolicyObjective obj_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::uint64_t decided_ = 0;
};

}  // namespace

PolicyResult derive_policy(std::size_t n, const PatternGraph& h, const PatternGraph& f,
                           const PolicyObjective& objective) {
  if (n > 6) throw CapabilityError("derive_policy supports n <= 6");
  PolicyResult out;
  out.table = PolicyTable(n, h, f, objective);
  const BoardModel& board = *out.table.board_;
  PolicySolver solver(board, objective);
  const auto target = static_cast<std::int64_t>(objective.min_score);

  const std::uint32_t root_avail = board.available(0, board.full);
  const bool root_dead = root_avail != board.full;
  out.achieved = solver.win(0, root_avail, root_dead, Player::Constructor);
  if (!out.achieved) {
    out.positions = solver.decided();
    return out;
  }

  // Walk every position reachable under the policy and record its move.
  struct Node {
    std::uint32_t c, b;
    Player side;
  };
  std::vector<Node> stack{{0, 0, Player::Constructor}};
  std::unordered_set<std::uint64_t> visited;
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    const std::uint32_t unclaimed = board.full & ~node.c & ~node.b;
    const std::uint32_t avail = board.available(node.c, unclaimed);
    const bool dead = (unclaimed & ~avail) != 0;
    if (board.score(node.c) >= target || !avail) continue;
    const auto k = board.key(node.c, avail, node.side);
    if (!visited.insert(k.key * 2 + (dead ? 1 : 0)).second) continue;
    if (node.side == Player::Constructor) {
      bool found = false;
      for (std::uint32_t rest = avail; rest; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        const std::uint32_t nc = node.c | bit;
        const std::uint32_t na = board.available(nc, avail & ~bit);
        if (!solver.win(nc, na, dead || (avail & ~bit & ~na) != 0, Player::Blocker)) continue;
        const Edge e = board.pair_edge[static_cast<std::size_t>(std::countr_zero(bit))];
        out.table.insert(k.key, Edge(k.label[e.u], k.label[e.v]));
        stack.push_back({nc, node.b, Player::Blocker});
        found = true;
        break;
      }
      if (!found) throw InternalError("policy extraction lost a winning move");
    } else {
      for (std::uint32_t rest = unclaimed; rest; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        stack.push_back({node.c, node.b | bit, Player::Constructor});
      }
      if (objective.blocker_may_pass) stack.push_back({node.c, node.b, Player::Constructor});
    }
  }
  out.positions = solver.decided();
  return out;
}

// ------------------------------------------------------------ certificate

namespace {

class CertificateWalker {
 public:
  explicit CertificateWalker(const PolicyTable& p) : policy_(p) {}

  CertificateReport run() {
    report_.min_score = std::numeric_limits<std::uint64_t>::max();
    SimpleGraph c(policy_.n()), b(policy_.n());
    report_.ok = walk(c, b, Player::Constructor);
    if (report_.lines == 0) report_.min_score = 0;
    return report_;
  }

 private:
  bool leaf(std::uint64_t s) {
    ++report_.lines;
    report_.min_score = std::min(report_.min_score, s);
    return true;
  }

  bool fail(const std::string& why) {
    if (report_.failure.empty()) report_.failure = why;
    return false;
  }

  bool walk(SimpleGraph& c, SimpleGraph& b, Player side) {
    const std::size_t n = policy_.n();
    const auto s = count_copies(c, policy_.target()).value;
    if (s >= policy_.objective().min_score) return leaf(s);
    bool constructor_can_move = false;
    std::vector<Edge> unclaimed;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        const Edge e(u, v);
        if (c.has_edge(e) || b.has_edge(e)) continue;
        unclaimed.push_back(e);
        if (!constructor_can_move && !creates_copy(c, e, policy_.forbidden()))
          constructor_can_move = true;
      }
    if (!constructor_can_move)
      return fail("game ended with score " + std::to_string(s) + " below the objective");
    if (side == Player::Constructor) {
      const auto move = policy_.lookup(c, b);
      if (!move) return fail("policy has no entry for a reachable position");
      if (c.has_edge(*move) || b.has_edge(*move)) return fail("policy claims a taken pair");
      if (creates_copy(c, *move, policy_.forbidden()))
        return fail("policy move creates " + policy_.forbidden().spec());
      SimpleGraph next = c.with_edge(*move);
      return walk(next, b, Player::Blocker);
    }
    for (const Edge& e : unclaimed) {
      SimpleGraph next = b.with_edge(e);
      if (!walk(c, next, Player::Constructor)) return false;
    }
    if (policy_.objective().blocker_may_pass && !walk(c, b, Player::Constructor)) return false;
    return true;
  }

  const PolicyTable& policy_;
  CertificateReport report_;
};

}  // namespace

CertificateReport check_policy(const PolicyTable& policy) {
  if (policy.n() == 0) return CertificateReport{false, 0, 0, "empty policy"};
  return CertificateWalker(policy).run();
}

// ------------------------------------------------------------ extremal

std::uint64_t brute_force_ex(std::size_t n, const PatternGraph& h, const PatternGraph& f) {
  if (n > kMaxSolverOrder)
    throw CapabilityError("brute_force_ex supports n <= " + std::to_string(kMaxSolverOrder));
  // Canonical augmentation by one vertex at a time. F-freeness is inherited
  // by induced subgraphs, so every F-free graph on k+1 vertices extends an
  // F-free graph on k vertices.
  std::vector<SimpleGraph> level{SimpleGraph(0)};
  for (std::size_t k = 0; k < n; ++k) {
    std::set<CanonCode> seen;
    std::vector<SimpleGraph> next;
    for (const SimpleGraph& g : level) {
      for (std::uint32_t nb = 0; nb < (1U << k); ++nb) {
        SimpleGraph ext(k + 1);
        for (const Edge& e : g.edges()) ext.add_edge(e);
        for (Vertex v = 0; v < k; ++v)
          if ((nb >> v) & 1U) ext.add_edge(v, static_cast<Vertex>(k));
        if (count_copies(ext, f).value != 0) continue;
        if (!seen.insert(canonical_form(ext).code).second) continue;
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  std::uint64_t best = 0;
  for (const auto& g : level) best = std::max(best, count_copies(g, h).value);
  return best;
}

}  // namespace cbgame

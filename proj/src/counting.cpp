#include "cbgame/counting.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>

#include "cbgame/errors.hpp"

namespace cbgame {

std::ostream& operator<<(std::ostream& os, CopyCount c) { return os << c.value; }

namespace {

using Row = std::vector<std::uint64_t>;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// dst = a & b restricted to indices strictly above `w`.
void and_above(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b, std::size_t w) {
  const std::size_t word = w >> 6;
  for (std::size_t i = 0; i < word; ++i) dst[i] = 0;
  const std::size_t bit = w & 63;
  const std::uint64_t keep = bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
  dst[word] = a[word] & b[word] & keep;
  for (std::size_t i = word + 1; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

// ---------------------------------------------------------------- cliques

std::uint64_t cliques_within(const SimpleGraph& g, std::span<const std::uint64_t> cand,
                             std::size_t k, std::vector<Row>& scratch, std::size_t depth) {
  if (k == 0) return 1;
  if (k == 1) return bits::count(cand);
  if (scratch.size() <= depth) scratch.emplace_back(g.words());
  std::uint64_t total = 0;
  bits::for_each(cand, [&](Vertex w) {
    Row& next = scratch[depth];
    and_above(next, cand, g.row(w), w);
    if (bits::any(next)) total += cliques_within(g, next, k - 1, scratch, depth + 1);
  });
  return total;
}

bool clique_exists_within(const SimpleGraph& g, std::span<const std::uint64_t> cand,
                          std::size_t k, std::vector<Row>& scratch, std::size_t depth) {
  if (k == 0) return true;
  if (k == 1) return bits::any(cand);
  if (scratch.size() <= depth) scratch.emplace_back(g.words());
  bool found = false;
  bits::for_each(cand, [&](Vertex w) {
    if (found) return;
    Row& next = scratch[depth];
    and_above(next, cand, g.row(w), w);
    if (bits::count(next) >= k - 1 && clique_exists_within(g, next, k - 1, scratch, depth + 1))
      found = true;
  });
  return found;
}

std::uint64_t count_cliques(const SimpleGraph& g, std::size_t r) {
  if (r > g.order()) return 0;
  if (r == 1) return g.order();
  if (r == 2) return g.size();
  std::vector<Row> scratch;
  Row above(g.words());
  Row all(g.words(), ~std::uint64_t{0});
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    and_above(above, all, g.row(v), v);
    total += cliques_within(g, above, r - 1, scratch, 0);
  }
  return total;
}

// ---------------------------------------------------------------- cycles

std::uint64_t count_c4(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> a2(n, 0);
  std::vector<Vertex> touched;
  std::uint64_t twice = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex k : g.neighbors(i))
      for (Vertex j : g.neighbors(k))
        if (j > i) {
          if (a2[j]++ == 0) touched.push_back(j);
        }
    for (Vertex j : touched) {
      twice += binomial(a2[j], 2);
      a2[j] = 0;
    }
    touched.clear();
  }
  return twice / 2;
}

// Closed-walk identity: 10 c5 = tr A^5 - 5 tr A^3 - 5 sum_i (d_i - 2) (A^3)_ii.
std::uint64_t count_c5(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> a2(n, 0), a3(n, 0);
  std::vector<Vertex> t2, t3;
  std::int64_t tr5 = 0, tr3 = 0, weighted = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex k : g.neighbors(i))
      for (Vertex j : g.neighbors(k))
        if (a2[j]++ == 0) t2.push_back(j);
    for (Vertex k : t2)
      for (Vertex j : g.neighbors(k))
        if ((a3[j] += a2[k]) == a2[k]) t3.push_back(j);
    for (Vertex j : t3) tr5 += a2[j] * a3[j];
    tr3 += a3[i];
    weighted += (static_cast<std::int64_t>(g.degree(i)) - 2) * a3[i];
    for (Vertex j : t2) a2[j] = 0;
    for (Vertex j : t3) a3[j] = 0;
    t2.clear();
    t3.clear();
  }
  const std::int64_t ten = tr5 - 5 * tr3 - 5 * weighted;
  return static_cast<std::uint64_t>(ten / 10);
}

// Counts each cycle once: the start is its minimum vertex and both traversal
// directions are found, hence the final halving.
std::uint64_t count_long_cycles(const SimpleGraph& g, std::size_t m) {
  const std::size_t n = g.order();
  std::vector<char> on_path(n, 0);
  std::uint64_t total = 0;
  std::function<void(Vertex, Vertex, std::size_t)> dfs = [&](Vertex s, Vertex x,
                                                             std::size_t len) {
    if (len == m) {
      if (g.has_edge(x, s)) ++total;
      return;
    }
    for (Vertex y : g.neighbors(x)) {
      if (y <= s || on_path[y]) continue;
      on_path[y] = 1;
      dfs(s, y, len + 1);
      on_path[y] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on_path[s] = 1;
    dfs(s, s, 1);
    on_path[s] = 0;
  }
  return total / 2;
}

std::uint64_t count_cycles(const SimpleGraph& g, std::size_t m) {
  if (m > g.order()) return 0;
  switch (m) {
    case 3: return count_cliques(g, 3);
    case 4: return count_c4(g);
    case 5: return count_c5(g);
    default: return count_long_cycles(g, m);
  }
}

// ---------------------------------------------------------------- K_{s,t}

std::uint64_t count_complete_bipartite(const SimpleGraph& g, std::size_t s, std::size_t t) {
  if (s > t) std::swap(s, t);
  if (s + t > g.order()) return 0;
  std::uint64_t total = 0;
  std::vector<Row> scratch(s + 1, Row(g.words()));
  std::function<void(Vertex, std::size_t)> pick = [&](Vertex next, std::size_t chosen) {
    if (chosen == s) {
      total += binomial(bits::count(scratch[chosen]), t);
      return;
    }
    for (Vertex v = next; v < g.order(); ++v) {
      auto& dst = scratch[chosen + 1];
      const auto src = g.row(v);
      if (chosen == 0) {
        std::copy(src.begin(), src.end(), dst.begin());
      } else {
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = scratch[chosen][w] & src[w];
      }
      if (bits::count(dst) >= t) pick(v + 1, chosen + 1);
    }
  };
  pick(0, 0);
  return s == t ? total / 2 : total;
}

// ---------------------------------------------------------------- generic

/// Mapping order for H: fixed prefix first, then greedily the vertex with the
/// most already-placed neighbours.
struct EmbedPlan {
  std::vector<Vertex> order;
  std::vector<std::vector<std::size_t>> back;  // earlier positions adjacent in H
};

EmbedPlan make_plan(const SimpleGraph& h, std::span<const Vertex> prefix) {
  const std::size_t k = h.order();
  EmbedPlan plan;
  std::vector<char> placed(k, 0);
  for (Vertex p : prefix) {
    plan.order.push_back(p);
    placed[p] = 1;
  }
  while (plan.order.size() < k) {
    int best = -1;
    std::size_t best_links = 0, best_deg = 0;
    for (Vertex x = 0; x < k; ++x) {
      if (placed[x]) continue;
      std::size_t links = 0;
      for (Vertex y : h.neighbors(x)) links += placed[y];
      if (best < 0 || links > best_links || (links == best_links && h.degree(x) > best_deg)) {
        best = static_cast<int>(x);
        best_links = links;
        best_deg = h.degree(x);
      }
    }
    plan.order.push_back(static_cast<Vertex>(best));
    placed[static_cast<std::size_t>(best)] = 1;
  }
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[plan.order[i]] = i;
  plan.back.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    for (Vertex y : h.neighbors(plan.order[i]))
      if (pos[y] < i) plan.back[i].push_back(pos[y]);
  return plan;
}

/// Backtracking over injective maps H -> G that send H-edges to edges of the
/// host. The host is described by a row accessor so a virtual edge can be
/// overlaid without copying G.
template <class RowFn>
class Embedder {
 public:
  Embedder(std::size_t n, std::size_t words, const EmbedPlan& plan, RowFn rows)
      : n_(n), words_(words), plan_(plan), rows_(rows),
        cand_(plan.order.size(), Row(words)), used_(words, 0), image_(plan.order.size()) {}

  /// Visits every completion of `prefix_images`. visit() returns true to stop.
  template <class Visit>
  bool run(std::span<const Vertex> prefix_images, Visit&& visit) {
    for (std::size_t i = 0; i < prefix_images.size(); ++i) {
      const Vertex x = prefix_images[i];
      if (bits::test(used_, x)) return unwind(i), false;
      for (std::size_t j : plan_.back[i])
        if (!bits::test(rows_(image_[j]), x)) return unwind(i), false;
      image_[i] = x;
      bits::set(used_, x);
    }
    const bool stopped = extend(prefix_images.size(), visit);
    unwind(prefix_images.size());
    return stopped;
  }

  const std::vector<Vertex>& image() const { return image_; }

 private:
  void unwind(std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) bits::reset(used_, image_[i]);
  }

  template <class Visit>
  bool extend(std::size_t pos, Visit& visit) {
    if (pos == plan_.order.size()) return visit(image_);
    Row& cand = cand_[pos];
    const auto& back = plan_.back[pos];
    if (back.empty()) {
      for (std::size_t w = 0; w < words_; ++w) cand[w] = ~used_[w];
      const std::size_t tail = n_ & 63;
      if (tail) cand[words_ - 1] &= (std::uint64_t{1} << tail) - 1;
    } else {
      const auto first = rows_(image_[back[0]]);
      for (std::size_t w = 0; w < words_; ++w) cand[w] = first[w] & ~used_[w];
      for (std::size_t b = 1; b < back.size(); ++b) {
        const auto r = rows_(image_[back[b]]);
        for (std::size_t w = 0; w < words_; ++w) cand[w] &= r[w];
      }
    }
    bool stopped = false;
    bits::for_each(cand, [&](Vertex x) {
      if (stopped) return;
      image_[pos] = x;
      bits::set(used_, x);
      stopped = extend(pos + 1, visit);
      bits::reset(used_, x);
    });
    return stopped;
  }

  std::size_t n_;
  std::size_t words_;
  const EmbedPlan& plan_;
  RowFn rows_;
  std::vector<Row> cand_;
  Row used_;
  std::vector<Vertex> image_;
};

template <class RowFn>
Embedder<RowFn> make_embedder(std::size_t n, std::size_t words, const EmbedPlan& plan,
                              RowFn rows) {
  return Embedder<RowFn>(n, words, plan, rows);
}

void require_generic_size(const SimpleGraph& h) {
  if (h.order() > kMaxExplicitPattern)
    throw CapabilityError("pattern has " + std::to_string(h.order()) +
                          " vertices; the backtracking kernel handles at most " +
                          std::to_string(kMaxExplicitPattern));
}

std::uint64_t count_embeddings(const SimpleGraph& g, const SimpleGraph& h) {
  if (h.order() > g.order()) return 0;
  const EmbedPlan plan = make_plan(h, {});
  auto emb = make_embedder(g.order(), g.words(), plan, [&](Vertex x) { return g.row(x); });
  std::uint64_t count = 0;
  emb.run({}, [&](const std::vector<Vertex>&) {
    ++count;
    return false;
  });
  return count;
}

/// Row accessor of G + e.
class OverlayRows {
 public:
  OverlayRows(const SimpleGraph& g, Edge e)
      : g_(&g), e_(e), ru_(g.row(e.u).begin(), g.row(e.u).end()),
        rv_(g.row(e.v).begin(), g.row(e.v).end()) {
    bits::set(ru_, e.v);
    bits::set(rv_, e.u);
  }
  std::span<const std::uint64_t> operator()(Vertex x) const {
    if (x == e_.u) return ru_;
    if (x == e_.v) return rv_;
    return g_->row(x);
  }

 private:
  const SimpleGraph* g_;
  Edge e_;
  Row ru_, rv_;
};

/// Visits embeddings of H into G + e that send some H-edge onto e.
template <class Visit>
bool embeddings_through(const SimpleGraph& g, Edge e, const SimpleGraph& h, Visit&& visit) {
  const OverlayRows rows(g, e);
  for (const Edge he : h.edges()) {
    const Vertex prefix[2] = {he.u, he.v};
    const EmbedPlan plan = make_plan(h, prefix);
    auto emb = make_embedder(g.order(), g.words(), plan, std::cref(rows));
    const Vertex forward[2] = {e.u, e.v};
    const Vertex backward[2] = {e.v, e.u};
    if (emb.run(forward, visit)) return true;
    if (emb.run(backward, visit)) return true;
  }
  return false;
}

// ---------------------------------------------------------------- creation

thread_local std::vector<std::uint32_t> tl_count;
thread_local std::vector<std::uint32_t> tl_stamp;
thread_local std::vector<Vertex> tl_witness;
thread_local std::uint32_t tl_generation = 0;

void prepare_scratch(std::size_t n) {
  if (tl_stamp.size() < n) {
    tl_stamp.assign(n, 0);
    tl_count.assign(n, 0);
    tl_witness.assign(n, 0);
    tl_generation = 0;
  }
  if (++tl_generation == 0) {
    std::fill(tl_stamp.begin(), tl_stamp.end(), 0);
    tl_generation = 1;
  }
}

bool closes_c4(const SimpleGraph& g, Vertex u, Vertex v) {
  prepare_scratch(g.order());
  for (Vertex a : g.neighbors(u)) tl_stamp[a] = tl_generation;
  for (Vertex c : g.neighbors(v)) {
    if (c == u) continue;
    for (Vertex a : g.neighbors(c))
      if (tl_stamp[a] == tl_generation && a != v) return true;
  }
  return false;
}

// Path u-a-b-c-v with five distinct vertices.
bool closes_c5(const SimpleGraph& g, Vertex u, Vertex v) {
  prepare_scratch(g.order());
  const std::uint32_t gen = tl_generation;
  for (Vertex a : g.neighbors(u)) {
    if (a == v) continue;
    for (Vertex b : g.neighbors(a)) {
      if (b == u || b == v) continue;
      if (tl_stamp[b] != gen) {
        tl_stamp[b] = gen;
        tl_count[b] = 0;
      }
      ++tl_count[b];
      tl_witness[b] = a;
    }
  }
  for (Vertex c : g.neighbors(v)) {
    if (c == u) continue;
    for (Vertex b : g.neighbors(c)) {
      if (b == u || b == v || tl_stamp[b] != gen) continue;
      if (tl_count[b] >= 2 || tl_witness[b] != c) return true;
    }
  }
  return false;
}

/// Distances from `target` up to `limit`; unreachable entries stay > limit.
std::vector<std::uint32_t> bounded_bfs(const SimpleGraph& g, Vertex target, std::uint32_t limit) {
  std::vector<std::uint32_t> dist(g.order(), limit + 1);
  std::vector<Vertex> frontier{target}, next;
  dist[target] = 0;
  for (std::uint32_t d = 1; d <= limit && !frontier.empty(); ++d) {
    next.clear();
    for (Vertex x : frontier)
      for (Vertex y : g.neighbors(x))
        if (dist[y] > d) {
          dist[y] = d;
          next.push_back(y);
        }
    frontier.swap(next);
  }
  return dist;
}

/// Simple path of exactly `length` edges from u to v in g.
bool has_path_of_length(const SimpleGraph& g, Vertex u, Vertex v, std::size_t length) {
  const auto dist = bounded_bfs(g, v, static_cast<std::uint32_t>(length));
  if (dist[u] > length) return false;
  std::vector<char> on_path(g.order(), 0);
  on_path[u] = 1;
  std::function<bool(Vertex, std::size_t)> dfs = [&](Vertex x, std::size_t remaining) {
    if (remaining == 1) return g.has_edge(x, v);
    for (Vertex y : g.neighbors(x)) {
      if (y == v || on_path[y] || dist[y] > remaining - 1) continue;
      on_path[y] = 1;
      const bool found = dfs(y, remaining - 1);
      on_path[y] = 0;
      if (found) return true;
    }
    return false;
  };
  return dfs(u, length);
}

}  // namespace

CopyCount count_copies_generic(const SimpleGraph& g, const SimpleGraph& h) {
  require_generic_size(h);
  if (h.order() > g.order()) return CopyCount{0};
  return CopyCount{count_embeddings(g, h) / automorphism_count(h)};
}

std::uint64_t automorphism_count(const SimpleGraph& h) {
  require_generic_size(h);
  return count_embeddings(h, h);
}

CopyCount count_copies(const SimpleGraph& g, const PatternGraph& h) {
  if (h.vertex_count() > g.order()) return CopyCount{0};
  switch (h.kind()) {
    case PatternGraph::Kind::Clique:
      if (h.first() > kMaxStructuredPattern) break;
      return CopyCount{count_cliques(g, h.first())};
    case PatternGraph::Kind::Cycle:
      if (h.first() > kMaxStructuredPattern) break;
      return CopyCount{count_cycles(g, h.first())};
    case PatternGraph::Kind::CompleteBipartite:
      if (h.vertex_count() > kMaxStructuredPattern) break;
      return CopyCount{count_complete_bipartite(g, h.first(), h.second())};
    case PatternGraph::Kind::Explicit:
      return count_copies_generic(g, h.graph());
  }
  throw CapabilityError("pattern " + h.spec() + " exceeds " +
                        std::to_string(kMaxStructuredPattern) + " vertices");
}

bool creates_copy(const SimpleGraph& g, Edge e, const PatternGraph& f) {
  if (e.u == e.v || e.v >= g.order()) throw InputError("creates_copy: invalid edge");
  if (g.has_edge(e)) throw InputError("creates_copy: edge already present");
  if (f.vertex_count() > g.order()) return false;
  switch (f.kind()) {
    case PatternGraph::Kind::Clique: {
      const std::size_t r = f.first();
      if (r > kMaxStructuredPattern) break;
      if (r == 2) return true;
      Row common(g.words());
      const auto ru = g.row(e.u), rv = g.row(e.v);
      for (std::size_t w = 0; w < common.size(); ++w) common[w] = ru[w] & rv[w];
      std::vector<Row> scratch;
      return clique_exists_within(g, common, r - 2, scratch, 0);
    }
    case PatternGraph::Kind::Cycle: {
      const std::size_t m = f.first();
      if (m > kMaxStructuredPattern) break;
      if (m == 3) return bits::count_and(g.row(e.u), g.row(e.v)) > 0;
      if (m == 4) return closes_c4(g, e.u, e.v);
      if (m == 5) return closes_c5(g, e.u, e.v);
      return has_path_of_length(g, e.u, e.v, m - 1);
    }
    case PatternGraph::Kind::CompleteBipartite:
    case PatternGraph::Kind::Explicit: {
      require_generic_size(f.graph());
      return embeddings_through(g, e, f.graph(), [](const std::vector<Vertex>&) { return true; });
    }
  }
  throw CapabilityError("pattern " + f.spec() + " too large for creates_copy");
}

CopyCount copies_through_edge(const SimpleGraph& g, Edge e, const SimpleGraph& h) {
  require_generic_size(h);
  if (g.has_edge(e)) throw InputError("copies_through_edge: edge already present");
  if (h.order() > g.order()) return CopyCount{0};
  std::uint64_t count = 0;
  embeddings_through(g, e, h, [&](const std::vector<Vertex>&) {
    ++count;
    return false;
  });
  // Each copy through e is reached once per automorphism (with the H-edge
  // landing on e and orientation both determined by the automorphism).
  return CopyCount{count / automorphism_count(h)};
}

bool has_cycle_of_length(const SimpleGraph& g, std::size_t t) {
  if (t < 3) throw InputError("has_cycle_of_length: t must be >= 3");
  if (t > g.order()) return false;
  if (t <= 5) return count_cycles(g, t) > 0;
  const std::size_t n = g.order();
  std::vector<char> on_path(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (g.degree(s) < 2) continue;
    // Distances to s inside the subgraph of vertices >= s.
    std::vector<std::uint32_t> dist(n, static_cast<std::uint32_t>(t + 1));
    std::vector<Vertex> frontier{s}, next;
    dist[s] = 0;
    for (std::uint32_t d = 1; d <= t && !frontier.empty(); ++d) {
      next.clear();
      for (Vertex x : frontier)
        for (Vertex y : g.neighbors(x))
          if (y > s && dist[y] > d) {
            dist[y] = d;
            next.push_back(y);
          }
      frontier.swap(next);
    }
    on_path[s] = 1;
    std::function<bool(Vertex, std::size_t)> dfs = [&](Vertex x, std::size_t len) {
      if (len == t) return g.has_edge(x, s);
      const std::size_t remaining = t - len;  // edges still needed back to s
      for (Vertex y : g.neighbors(x)) {
        if (y <= s || on_path[y] || dist[y] > remaining) continue;
        on_path[y] = 1;
        const bool found = dfs(y, len + 1);
        on_path[y] = 0;
        if (found) return true;
      }
      return false;
    };
    const bool found = dfs(s, 1);
    on_path[s] = 0;
    if (found) return true;
  }
  return false;
}

std::vector<std::vector<Edge>> enumerate_copies(const SimpleGraph& g, const SimpleGraph& h) {
  require_generic_size(h);
  std::set<std::vector<Edge>> seen;
  if (h.order() > g.order()) return {};
  const EmbedPlan plan = make_plan(h, {});
  auto emb = make_embedder(g.order(), g.words(), plan, [&](Vertex x) { return g.row(x); });
  const auto h_edges = h.edges();
  std::vector<Vertex> at(h.order());
  emb.run({}, [&](const std::vector<Vertex>& image) {
    for (std::size_t i = 0; i < plan.order.size(); ++i) at[plan.order[i]] = image[i];
    std::vector<Edge> copy;
    copy.reserve(h_edges.size());
    for (const auto& he : h_edges) copy.emplace_back(at[he.u], at[he.v]);
    std::sort(copy.begin(), copy.end());
    seen.insert(std::move(copy));
    return false;
  });
  return {seen.begin(), seen.end()};
}

}  // namespace cbgame

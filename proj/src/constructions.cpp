#include "cbgame/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

#include "cbgame/errors.hpp"
#include "cbgame/rng.hpp"

namespace cbgame {

std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r) {
  if (r == 0) throw InputError("Turan graph needs r >= 1");
  std::vector<std::size_t> sizes(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

SimpleGraph turan_graph(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) throw InputError("turan_graph needs 1 <= r <= n");
  const auto sizes = turan_part_sizes(n, r);
  std::vector<std::size_t> part(n);
  std::size_t v = 0;
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t i = 0; i < sizes[p]; ++i) part[v++] = p;
  SimpleGraph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (part[a] != part[b]) g.add_edge(a, b);
  return g;
}

std::uint64_t turan_edge_count(std::size_t n, std::size_t r) {
  const auto sizes = turan_part_sizes(n, r);
  std::uint64_t inside = 0;
  for (auto s : sizes) inside += static_cast<std::uint64_t>(s) * (s - (s > 0)) / 2;
  return pair_count(n) - inside;
}

CopyCount zykov_count(std::size_t n, std::size_t r, std::size_t s) {
  if (r < 2 || s <= r) throw InputError("zykov_count needs s > r >= 2");
  if (n < 1) throw InputError("zykov_count needs n >= 1");
  const auto sizes = turan_part_sizes(n, s - 1);
  // Elementary symmetric polynomial e_r of the part sizes.
  std::vector<std::uint64_t> e(r + 1, 0);
  e[0] = 1;
  for (auto size : sizes)
    for (std::size_t j = r; j >= 1; --j) e[j] += e[j - 1] * size;
  return CopyCount{e[r]};
}

HalfBlowup half_blowup_graph(std::size_t n, std::size_t l) {
  if (l < 2) throw InputError("half_blowup_graph needs l >= 2");
  if (n < 3 * l + 1) throw InputError("half_blowup_graph needs n >= 3l+1");
  HalfBlowup out;
  const std::size_t rest = n - l - 1;
  out.rounded = rest % l != 0;
  out.parts.resize(2 * l + 1);
  Vertex next = 0;
  for (std::size_t i = 0; i <= 2 * l; ++i) {
    std::size_t size = 1;
    if (i % 2 == 1) {
      const std::size_t j = i / 2;
      size = rest / l + (j < rest % l ? 1 : 0);
    }
    for (std::size_t t = 0; t < size; ++t) out.parts[i].push_back(next++);
  }
  out.graph = SimpleGraph(n);
  for (std::size_t i = 0; i <= 2 * l; ++i) {
    const auto& a = out.parts[i];
    const auto& b = out.parts[(i + 1) % (2 * l + 1)];
    for (Vertex x : a)
      for (Vertex y : b) out.graph.add_edge(x, y);
  }
  return out;
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::size_t girth(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  std::vector<std::uint32_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), UINT32_MAX);
    dist[root] = 0;
    parent[root] = root;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      if (best && 2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == UINT32_MAX) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          const std::size_t len = dist[x] + dist[y] + 1;
          if (!best || len < best) best = len;
        }
      }
    }
  }
  return best;
}

namespace {

BipartiteConstruction incidence_construction(std::size_t side) {
  std::uint64_t q = 2;
  while (q * q + q + 1 < side || !is_prime(q)) ++q;
  // Normalized homogeneous coordinates of PG(2,q).
  std::vector<std::array<std::uint64_t, 3>> pts;
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t b = 0; b < q; ++b) pts.push_back({1, a, b});
  for (std::uint64_t a = 0; a < q; ++a) pts.push_back({0, 1, a});
  pts.push_back({0, 0, 1});
  const std::size_t total = pts.size();
  auto incident = [&](std::size_t p, std::size_t l) {
    const auto& x = pts[p];
    const auto& y = pts[l];
    return (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0;
  };
  std::vector<std::size_t> lines(total), hits(total, 0);
  std::iota(lines.begin(), lines.end(), std::size_t{0});
  for (std::size_t l = 0; l < total; ++l)
    for (std::size_t p = 0; p < side; ++p) hits[l] += incident(p, l);
  std::stable_sort(lines.begin(), lines.end(),
                   [&](std::size_t a, std::size_t b) { return hits[a] > hits[b]; });
  BipartiteConstruction out;
  out.graph = SimpleGraph(2 * side);
  out.left = side;
  out.method = "incidence:q=" + std::to_string(q);
  for (std::size_t p = 0; p < side; ++p)
    for (std::size_t j = 0; j < side; ++j)
      if (incident(p, lines[j]))
        out.graph.add_edge(static_cast<Vertex>(p), static_cast<Vertex>(side + j));
  return out;
}

BipartiteConstruction greedy_construction(std::size_t m, std::size_t k) {
  const std::size_t left = m / 2;
  BipartiteConstruction out;
  out.graph = SimpleGraph(m);
  out.left = left;
  out.method = "greedy";
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < left; ++a)
    for (Vertex b = static_cast<Vertex>(left); b < m; ++b) pairs.emplace_back(a, b);
  Rng rng(0x5eed + m * 31 + k);
  shuffle_in_place(pairs, rng);
  // Adding ab closes a cycle of length dist(a,b)+1, so we need dist >= 2k+1.
  const std::uint32_t limit = static_cast<std::uint32_t>(2 * k);
  std::vector<std::uint32_t> dist(m, UINT32_MAX);
  std::vector<Vertex> queue;
  for (const Edge& e : pairs) {
    queue.assign(1, e.u);
    dist[e.u] = 0;
    bool close = false;
    for (std::size_t head = 0; head < queue.size() && !close; ++head) {
      const Vertex x = queue[head];
      if (dist[x] >= limit) continue;
      for (Vertex y : out.graph.neighbors(x)) {
        if (dist[y] != UINT32_MAX) continue;
        dist[y] = dist[x] + 1;
        if (y == e.v) {
          close = true;
          break;
        }
        queue.push_back(y);
      }
    }
    for (Vertex x : queue) dist[x] = UINT32_MAX;
    dist[e.v] = UINT32_MAX;
    if (!close) out.graph.add_edge(e);
  }
  return out;
}

}  // namespace

BipartiteConstruction even_cycle_free_bipartite(std::size_t m, std::size_t k) {
  if (m < 8) throw InputError("even_cycle_free_bipartite needs m >= 8");
  if (k < 2) throw InputError("even_cycle_free_bipartite needs k >= 2");
  BipartiteConstruction out = k == 2 ? incidence_construction(m / 2) : greedy_construction(m, k);
  const std::size_t gir = girth(out.graph);
  if (!is_bipartite(out.graph) || (gir != 0 && gir <= 2 * k))
    throw ConstructionError("even-cycle-free construction failed its girth check");
  return out;
}

}  // namespace cbgame

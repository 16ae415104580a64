#pragma once

// Slow reference implementations used only by tests. Each one follows the
// definitions directly and shares no code with the library kernels.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cbgame/graph.hpp"
#include "cbgame/rng.hpp"

namespace oracle {

using cbgame::Edge;
using cbgame::SimpleGraph;
using cbgame::Vertex;

inline SimpleGraph random_graph(std::size_t n, double p, cbgame::Rng& rng) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (cbgame::uniform_unit(rng) < p) g.add_edge(u, v);
  return g;
}

inline std::vector<std::vector<bool>> matrix(const SimpleGraph& g) {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (const Edge& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = true;
  return m;
}

/// Injective maps V(h) -> V(g) preserving edges, by plain enumeration of
/// every ordered tuple of distinct vertices.
inline std::uint64_t homomorphic_injections(const SimpleGraph& g, const SimpleGraph& h) {
  const std::size_t k = h.order(), n = g.order();
  if (k > n) return 0;
  const auto gm = matrix(g);
  const auto he = h.edges();
  std::vector<std::size_t> img(k, 0);
  std::uint64_t total = 0;
  // Odometer over n^k tuples; distinctness filtered afterwards.
  while (true) {
    bool distinct = true;
    for (std::size_t i = 0; i < k && distinct; ++i)
      for (std::size_t j = i + 1; j < k && distinct; ++j) distinct = img[i] != img[j];
    if (distinct) {
      bool ok = true;
      for (const Edge& e : he) ok = ok && gm[img[e.u]][img[e.v]];
      total += ok;
    }
    std::size_t pos = 0;
    while (pos < k && ++img[pos] == n) img[pos++] = 0;
    if (pos == k) break;
  }
  return total;
}

/// Unlabeled copies: injections divided by automorphisms of h.
inline std::uint64_t copies(const SimpleGraph& g, const SimpleGraph& h) {
  if (h.order() > g.order()) return 0;
  return homomorphic_injections(g, h) / homomorphic_injections(h, h);
}

inline bool has_copy(const SimpleGraph& g, const SimpleGraph& h) { return copies(g, h) > 0; }

/// Graph on n vertices from a bitmask over the lexicographic pair order.
inline SimpleGraph from_mask(std::size_t n, std::uint32_t mask) {
  SimpleGraph g(n);
  for (std::uint64_t i = 0; i < cbgame::pair_count(n); ++i)
    if ((mask >> i) & 1U) g.add_edge(cbgame::edge_at(n, i));
  return g;
}

/// max #copies of h over all labeled f-free graphs on n vertices (n <= 6).
inline std::uint64_t extremal(std::size_t n, const SimpleGraph& h, const SimpleGraph& f) {
  const auto pairs = static_cast<std::uint32_t>(cbgame::pair_count(n));
  std::uint64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
    const SimpleGraph g = from_mask(n, mask);
    if (has_copy(g, f)) continue;
    best = std::max(best, copies(g, h));
  }
  return best;
}

/// Plain minimax without memoization; Constructor maximizes copies of h in
/// her final graph, must stay f-free, and the game ends when every pair is
/// claimed or Constructor has no legal pair left.
inline std::int64_t minimax(std::size_t n, const SimpleGraph& h, const SimpleGraph& f,
                            std::uint32_t c, std::uint32_t b, bool constructor_turn) {
  const auto pairs = static_cast<std::uint32_t>(cbgame::pair_count(n));
  const std::uint32_t full = (1U << pairs) - 1;
  std::vector<std::uint32_t> c_moves;
  for (std::uint32_t i = 0; i < pairs; ++i) {
    const std::uint32_t bit = 1U << i;
    if ((c | b) & bit) continue;
    if (!has_copy(from_mask(n, c | bit), f)) c_moves.push_back(bit);
  }
  if ((c | b) == full || c_moves.empty())
    return static_cast<std::int64_t>(copies(from_mask(n, c), h));
  if (constructor_turn) {
    std::int64_t best = -1;
    for (auto bit : c_moves) best = std::max(best, minimax(n, h, f, c | bit, b, false));
    return best;
  }
  std::int64_t best = INT64_MAX;
  for (std::uint32_t i = 0; i < pairs; ++i) {
    const std::uint32_t bit = 1U << i;
    if ((c | b) & bit) continue;
    best = std::min(best, minimax(n, h, f, c, b | bit, true));
  }
  return best;
}

/// Trivial-solution test straight from the definition.
inline bool trivial(const std::array<std::int64_t, 4>& c, const std::array<std::int64_t, 4>& x) {
  std::vector<unsigned> family;
  for (unsigned s = 1; s < 16; ++s) {
    std::int64_t sum = 0;
    bool ok = true;
    for (unsigned i = 0; i < 4; ++i)
      if (s & (1U << i)) {
        sum += c[i];
        ok = ok && c[i] != 0;
      }
    if (ok && sum == 0) family.push_back(s);
  }
  auto constant_on = [&](unsigned s) {
    std::int64_t first = -1;
    for (unsigned i = 0; i < 4; ++i)
      if (s & (1U << i)) {
        if (first < 0) first = x[i];
        else if (x[i] != first) return false;
      }
    return true;
  };
  for (unsigned s : family)
    for (unsigned t : family)
      if ((s & t) == 0 && (s | t) == 15 && constant_on(s) && constant_on(t)) return true;
  return family.size() == 1 && constant_on(family[0]);
}

/// k-fold Sidon in Z_n by looping over every coefficient tuple and every
/// quadruple of elements.
inline bool k_fold_sidon(const std::vector<std::int64_t>& a, std::int64_t n, std::int64_t k) {
  for (std::int64_t c1 = -k; c1 <= k; ++c1)
    for (std::int64_t c2 = -k; c2 <= k; ++c2)
      for (std::int64_t c3 = -k; c3 <= k; ++c3)
        for (std::int64_t c4 = -k; c4 <= k; ++c4) {
          if (c1 + c2 + c3 + c4 != 0) continue;
          if (c1 == 0 && c2 == 0 && c3 == 0 && c4 == 0) continue;
          for (auto x1 : a)
            for (auto x2 : a)
              for (auto x3 : a)
                for (auto x4 : a) {
                  const std::int64_t s = c1 * x1 + c2 * x2 + c3 * x3 + c4 * x4;
                  if (((s % n) + n) % n != 0) continue;
                  if (!trivial({c1, c2, c3, c4}, {x1, x2, x3, x4})) return false;
                }
        }
  return true;
}

}  // namespace oracle

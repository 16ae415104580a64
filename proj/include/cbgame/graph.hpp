#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cbgame {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// Position of edge {u,v} (u < v) in the lexicographic listing of E(K_n).
inline std::uint64_t edge_index(std::size_t n, Edge e) {
  const std::uint64_t u = e.u;
  return u * (2 * n - u - 1) / 2 + (e.v - e.u - 1);
}

Edge edge_at(std::size_t n, std::uint64_t index);

inline std::uint64_t pair_count(std::size_t n) {
  return static_cast<std::uint64_t>(n) * (n - (n > 0)) / 2;
}

/// Dense bitset rows.
namespace bits {

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

inline bool test(std::span<const std::uint64_t> row, std::size_t i) {
  return (row[i >> 6] >> (i & 63)) & 1U;
}

inline void set(std::span<std::uint64_t> row, std::size_t i) {
  row[i >> 6] |= std::uint64_t{1} << (i & 63);
}

inline void reset(std::span<std::uint64_t> row, std::size_t i) {
  row[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

inline std::size_t count(std::span<const std::uint64_t> row) {
  std::size_t c = 0;
  for (auto w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t count_and(std::span<const std::uint64_t> a,
                             std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline bool any(std::span<const std::uint64_t> row) {
  for (auto w : row)
    if (w) return true;
  return false;
}

/// Calls f(i) for every set bit i, in increasing order.
template <class F>
void for_each(std::span<const std::uint64_t> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t word = row[w];
    while (word) {
      const int b = std::countr_zero(word);
      f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
      word &= word - 1;
    }
  }
}

}  // namespace bits

/// Labeled undirected simple graph on {0..n-1}. Keeps a dense bitset row and
/// an adjacency list per vertex; both views always agree.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n);

  static SimpleGraph from_edges(std::size_t n, std::span<const Edge> edges);
  static SimpleGraph complete(std::size_t n);
  static SimpleGraph cycle(std::size_t n);
  static SimpleGraph path(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  std::size_t words() const noexcept { return words_; }

  bool has_edge(Vertex u, Vertex v) const {
    return u < n_ && v < n_ && bits::test(row(u), v);
  }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  /// Inserts {u,v}. Returns false when the edge was already present.
  /// Throws InputError on loops and out-of-range endpoints.
  bool add_edge(Vertex u, Vertex v);
  bool add_edge(Edge e) { return add_edge(e.u, e.v); }

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  /// Edges in ascending lexicographic order.
  std::vector<Edge> edges() const;

  SimpleGraph with_edge(Edge e) const;
  SimpleGraph induced(std::span<const Vertex> vertices) const;
  SimpleGraph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const SimpleGraph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  std::span<std::uint64_t> mutable_row(Vertex v) {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Edge-list text format: "n m" then m lines "u v", ascending order.
std::string write_edge_list(const SimpleGraph& g);
void write_edge_list(std::ostream& os, const SimpleGraph& g);
/// Rejects loops, duplicates, out-of-range endpoints and count mismatches.
SimpleGraph read_edge_list(std::istream& is);
SimpleGraph read_edge_list_file(const std::string& path);

bool is_bipartite(const SimpleGraph& g);
/// Exact test whether g admits a proper coloring with `colors` colors.
/// Backtracking; meant for small graphs.
bool is_colorable(const SimpleGraph& g, std::size_t colors);
bool is_connected(const SimpleGraph& g);

}  // namespace cbgame

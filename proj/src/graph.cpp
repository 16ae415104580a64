#include "cbgame/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "cbgame/errors.hpp"

namespace cbgame {

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '{' << e.u << ',' << e.v << '}';
}

Edge edge_at(std::size_t n, std::uint64_t index) {
  Vertex u = 0;
  std::uint64_t row = n - 1;
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return Edge(u, static_cast<Vertex>(u + 1 + index));
}

SimpleGraph::SimpleGraph(std::size_t n)
    : n_(n), words_(bits::words_for(n)), bits_(n * bits::words_for(n), 0), adj_(n) {}

SimpleGraph SimpleGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  SimpleGraph g(n);
  for (const auto& e : edges) g.add_edge(e);
  return g;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

bool SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_)
    throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loop");
  if (bits::test(row(u), v)) return false;
  bits::set(mutable_row(u), v);
  bits::set(mutable_row(v), u);
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
  return true;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    bits::for_each(row(u), [&](Vertex v) {
      if (v > u) out.emplace_back(u, v);
    });
  return out;
}

SimpleGraph SimpleGraph::with_edge(Edge e) const {
  SimpleGraph g = *this;
  g.add_edge(e);
  return g;
}

SimpleGraph SimpleGraph::induced(std::span<const Vertex> vertices) const {
  SimpleGraph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j]))
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

SimpleGraph SimpleGraph::relabeled(std::span<const Vertex> perm) const {
  SimpleGraph g(n_);
  for (const auto& e : edges()) g.add_edge(perm[e.u], perm[e.v]);
  return g;
}

void write_edge_list(std::ostream& os, const SimpleGraph& g) {
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

std::string write_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

SimpleGraph read_edge_list(std::istream& is) {
  long long n = -1, m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0)
    throw InputError("edge list: bad header, expected \"n m\"");
  SimpleGraph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(is >> u >> v)) throw InputError("edge list: truncated at edge " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge list: endpoint out of range at edge " + std::to_string(i));
    if (u == v) throw InputError("edge list: loop at edge " + std::to_string(i));
    if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw InputError("edge list: duplicate edge " + std::to_string(u) + " " +
                       std::to_string(v));
  }
  std::string extra;
  if (is >> extra) throw InputError("edge list: trailing data");
  return g;
}

SimpleGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_edge_list(in);
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          q.push(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_connected(const SimpleGraph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x))
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == g.order();
}

namespace {

bool color_from(const SimpleGraph& g, const std::vector<Vertex>& order, std::size_t i,
                std::size_t colors, std::vector<int>& color, int used) {
  if (i == order.size()) return true;
  const Vertex v = order[i];
  // Symmetry breaking: a fresh color is only ever the next unused one.
  const int limit = std::min<int>(static_cast<int>(colors), used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (Vertex w : g.neighbors(v))
      if (color[w] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (color_from(g, order, i + 1, colors, color, std::max(used, c + 1))) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

bool is_colorable(const SimpleGraph& g, std::size_t colors) {
  if (g.order() == 0) return true;
  if (colors == 0) return false;
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(g.order(), -1);
  return color_from(g, order, 0, colors, color, 0);
}

}  // namespace cbgame

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cbgame/counting.hpp"
#include "cbgame/graph.hpp"

namespace cbgame {

/// Part sizes of T(n,r): the first n % r parts get the extra vertex.
std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r);

/// Complete balanced r-partite graph on n vertices, parts contiguous.
SimpleGraph turan_graph(std::size_t n, std::size_t r);

std::uint64_t turan_edge_count(std::size_t n, std::size_t r);

/// Number of K_r in T(n, s-1): sum over r distinct parts of the product of
/// their sizes.
CopyCount zykov_count(std::size_t n, std::size_t r, std::size_t s);

struct HalfBlowup {
  SimpleGraph graph;
  std::vector<std::vector<Vertex>> parts;  // V_0 .. V_{2l}
  bool rounded = false;                    // l does not divide n - l - 1
};

/// Half blow-up of C_{2l+1}: even-indexed parts are singletons, odd-indexed
/// parts share the remaining n - l - 1 vertices; cyclically consecutive parts
/// are joined completely.
HalfBlowup half_blowup_graph(std::size_t n, std::size_t l);

struct BipartiteConstruction {
  SimpleGraph graph;
  std::size_t left = 0;  // vertices [0, left) form one side
  std::string method;    // "incidence:q=<q>" or "greedy"
};

/// Bipartite graph on at most m vertices with no cycle of length <= 2k.
/// k = 2 truncates the point/line incidence graph of PG(2,q); larger k uses
/// greedy insertion. The girth is certified before returning.
BipartiteConstruction even_cycle_free_bipartite(std::size_t m, std::size_t k);

/// Length of the shortest cycle, 0 for forests.
std::size_t girth(const SimpleGraph& g);

bool is_prime(std::uint64_t q);

}  // namespace cbgame

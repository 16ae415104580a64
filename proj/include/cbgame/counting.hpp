#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cbgame/graph.hpp"
#include "cbgame/pattern.hpp"

namespace cbgame {

/// Number of unlabeled copies of H in G: subgraphs isomorphic to H, not
/// necessarily induced.
struct CopyCount {
  std::uint64_t value = 0;
  auto operator<=>(const CopyCount&) const = default;
};

std::ostream& operator<<(std::ostream& os, CopyCount c);

/// Largest explicit pattern the backtracking kernel accepts.
inline constexpr std::size_t kMaxExplicitPattern = 10;
/// Largest structured pattern accepted by the specialized kernels.
inline constexpr std::size_t kMaxStructuredPattern = 64;

/// Dispatches to the clique / cycle / complete-bipartite kernels, falling
/// back to the generic counter for explicit patterns.
CopyCount count_copies(const SimpleGraph& g, const PatternGraph& h);

/// Ordered backtracking over injective edge-preserving maps, divided by the
/// automorphism count of h. Works for any h with at most kMaxExplicitPattern
/// vertices; the reference every specialized kernel is tested against.
CopyCount count_copies_generic(const SimpleGraph& g, const SimpleGraph& h);

std::uint64_t automorphism_count(const SimpleGraph& h);

/// True iff G + e contains a copy of F that uses e. Requires e not in G.
/// Local search around e; never scans the whole graph for cliques/short
/// cycles.
bool creates_copy(const SimpleGraph& g, Edge e, const PatternGraph& f);

/// Number of copies of H in G + e that contain e. Requires e not in G.
/// Generic backtracking; intended for small patterns.
CopyCount copies_through_edge(const SimpleGraph& g, Edge e, const SimpleGraph& h);

/// True iff G contains a cycle on exactly t vertices (not necessarily induced).
bool has_cycle_of_length(const SimpleGraph& g, std::size_t t);

/// All distinct copies of h in g, each as its sorted edge list.
std::vector<std::vector<Edge>> enumerate_copies(const SimpleGraph& g, const SimpleGraph& h);

}  // namespace cbgame

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cbgame/graph.hpp"

namespace cbgame {

/// A small target or forbidden graph (H or F), described structurally.
class PatternGraph {
 public:
  enum class Kind { Clique, Cycle, CompleteBipartite, Explicit };

  static PatternGraph clique(std::size_t r);
  static PatternGraph cycle(std::size_t m);
  static PatternGraph complete_bipartite(std::size_t s, std::size_t t);
  /// Explicit patterns must be connected unless `allow_disconnected` is set.
  static PatternGraph explicit_graph(SimpleGraph g, bool allow_disconnected = false);

  /// Mini-language: "k<r>", "c<m>", "k<s>,<t>", "explicit:@path".
  static PatternGraph parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::size_t first() const noexcept { return a_; }
  std::size_t second() const noexcept { return b_; }

  std::size_t vertex_count() const noexcept { return graph_.order(); }
  std::size_t edge_count() const noexcept { return graph_.size(); }
  bool connected() const noexcept { return connected_; }

  /// Closed form for the structured kinds, exact search for explicit ones.
  std::size_t chromatic_number() const;

  const SimpleGraph& graph() const noexcept { return graph_; }

  /// Round-trips through parse() for structured kinds.
  std::string spec() const;

  bool operator==(const PatternGraph& other) const {
    return kind_ == other.kind_ && a_ == other.a_ && b_ == other.b_ && graph_ == other.graph_;
  }

 private:
  PatternGraph(Kind kind, std::size_t a, std::size_t b, SimpleGraph g, bool connected,
               std::string source = {})
      : kind_(kind), a_(a), b_(b), graph_(std::move(g)), connected_(connected),
        source_(std::move(source)) {}

  Kind kind_ = Kind::Clique;
  std::size_t a_ = 0;
  std::size_t b_ = 0;
  SimpleGraph graph_;
  bool connected_ = true;
  std::string source_;
};

}  // namespace cbgame

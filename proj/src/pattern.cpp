#include "cbgame/pattern.hpp"

#include <charconv>

#include "cbgame/errors.hpp"

namespace cbgame {

namespace {

std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw InputError("bad pattern '" + std::string(whole) + "'");
  return value;
}

}  // namespace

PatternGraph PatternGraph::clique(std::size_t r) {
  if (r < 2) throw InputError("Clique(r) needs r >= 2");
  return PatternGraph(Kind::Clique, r, 0, SimpleGraph::complete(r), true);
}

PatternGraph PatternGraph::cycle(std::size_t m) {
  if (m < 3) throw InputError("Cycle(m) needs m >= 3");
  return PatternGraph(Kind::Cycle, m, 0, SimpleGraph::cycle(m), true);
}

PatternGraph PatternGraph::complete_bipartite(std::size_t s, std::size_t t) {
  if (s < 1 || t < 1) throw InputError("CompleteBipartite(s,t) needs s,t >= 1");
  SimpleGraph g(s + t);
  for (Vertex i = 0; i < s; ++i)
    for (Vertex j = 0; j < t; ++j) g.add_edge(i, static_cast<Vertex>(s + j));
  return PatternGraph(Kind::CompleteBipartite, s, t, std::move(g), true);
}

PatternGraph PatternGraph::explicit_graph(SimpleGraph g, bool allow_disconnected) {
  if (g.order() == 0) throw InputError("explicit pattern is empty");
  if (g.size() == 0) throw InputError("explicit pattern has no edges");
  const bool conn = is_connected(g);
  if (!conn && !allow_disconnected)
    throw InputError("explicit pattern is disconnected and not flagged as such");
  return PatternGraph(Kind::Explicit, 0, 0, std::move(g), conn);
}

PatternGraph PatternGraph::parse(std::string_view text) {
  constexpr std::string_view kExplicit = "explicit:@";
  if (text.starts_with(kExplicit)) {
    const std::string path(text.substr(kExplicit.size()));
    PatternGraph p = explicit_graph(read_edge_list_file(path), true);
    p.source_ = path;
    return p;
  }
  if (text.size() < 2) throw InputError("bad pattern '" + std::string(text) + "'");
  const char head = text.front();
  const std::string_view rest = text.substr(1);
  if (head == 'c' || head == 'C') return cycle(parse_size(rest, text));
  if (head == 'k' || head == 'K') {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) return clique(parse_size(rest, text));
    return complete_bipartite(parse_size(rest.substr(0, comma), text),
                              parse_size(rest.substr(comma + 1), text));
  }
  throw InputError("bad pattern '" + std::string(text) + "'");
}

std::size_t PatternGraph::chromatic_number() const {
  switch (kind_) {
    case Kind::Clique: return a_;
    case Kind::Cycle: return a_ % 2 == 0 ? 2 : 3;
    case Kind::CompleteBipartite: return 2;
    case Kind::Explicit: break;
  }
  std::size_t c = 1;
  while (!is_colorable(graph_, c)) ++c;
  return c;
}

std::string PatternGraph::spec() const {
  switch (kind_) {
    case Kind::Clique: return "k" + std::to_string(a_);
    case Kind::Cycle: return "c" + std::to_string(a_);
    case Kind::CompleteBipartite: return "k" + std::to_string(a_) + "," + std::to_string(b_);
    case Kind::Explicit: break;
  }
  return source_.empty() ? "explicit" : "explicit:@" + source_;
}

}  // namespace cbgame

#pragma once

#include <optional>

#include "cbgame/game.hpp"
#include "cbgame/rng.hpp"

namespace cbgame::detail {

inline Edge random_pair(std::size_t n, Rng& rng) {
  const auto u = static_cast<Vertex>(uniform_below(rng, n));
  auto v = static_cast<Vertex>(uniform_below(rng, n - 1));
  if (v >= u) ++v;
  return Edge(u, v);
}

/// Uniform-ish pick among pairs accepted by `ok`: rejection sampling first,
/// then a scan from a random offset so the call always terminates.
template <class Pred>
std::optional<Edge> sample_pair(std::size_t n, Rng& rng, Pred ok, int tries = 64) {
  if (n < 2) return std::nullopt;
  for (int i = 0; i < tries; ++i) {
    const Edge e = random_pair(n, rng);
    if (ok(e)) return e;
  }
  const std::uint64_t total = pair_count(n);
  const std::uint64_t start = uniform_below(rng, total);
  for (std::uint64_t i = 0; i < total; ++i) {
    const Edge e = edge_at(n, (start + i) % total);
    if (ok(e)) return e;
  }
  return std::nullopt;
}

inline std::optional<Move> last_move_by(const GameState& s, Player p) {
  const auto& h = s.history();
  if (h.empty() || h.back().player != p) return std::nullopt;
  return h.back();
}

}  // namespace cbgame::detail

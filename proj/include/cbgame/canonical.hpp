#pragma once

#include <cstdint>
#include <vector>

#include "cbgame/graph.hpp"

namespace cbgame {

inline constexpr std::size_t kMaxCanonicalOrder = 12;

using CanonCode = unsigned __int128;

/// Canonical labeling of a complete graph whose pairs carry colors 0..2.
/// `label[v]` is the canonical position of v. Isomorphic inputs (color
/// preserving) get the same code; the code is the base-3 reading of the pair
/// colors in canonical lexicographic pair order, minimized over the search
/// tree of individualization and color refinement.
struct Canonical {
  CanonCode code = 0;
  std::vector<std::uint8_t> label;
};

/// `colors` is an n*n symmetric matrix, diagonal ignored.
Canonical canonical_form(std::size_t n, const std::vector<std::uint8_t>& colors);

/// Plain graphs: edge = color 1.
Canonical canonical_form(const SimpleGraph& g);

}  // namespace cbgame

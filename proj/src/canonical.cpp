#include "cbgame/canonical.hpp"

#include <algorithm>

#include "cbgame/errors.hpp"

namespace cbgame {

namespace {

using Cells = std::vector<std::vector<std::uint8_t>>;

class Labeler {
 public:
  Labeler(std::size_t n, const std::vector<std::uint8_t>& colors) : n_(n), col_(colors) {}

  Canonical run() {
    Cells cells(1);
    for (std::size_t v = 0; v < n_; ++v) cells[0].push_back(static_cast<std::uint8_t>(v));
    refine(cells);
    search(cells);
    return best_;
  }

 private:
  std::uint8_t color(std::size_t a, std::size_t b) const { return col_[a * n_ + b]; }

  // Splits cells by the number of color-1 and color-2 partners in every cell
  // until the partition is stable. The split order depends only on the
  // counts, so it commutes with relabeling.
  void refine(Cells& cells) const {
    std::vector<std::size_t> cell_of(n_);
    for (;;) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (auto v : cells[c]) cell_of[v] = c;
      const std::size_t width = 2 * cells.size();
      std::vector<std::uint16_t> sig(n_ * width, 0);
      for (std::size_t v = 0; v < n_; ++v)
        for (std::size_t w = 0; w < n_; ++w) {
          if (v == w) continue;
          const auto k = color(v, w);
          if (k) ++sig[v * width + 2 * cell_of[w] + (k - 1)];
        }
      auto less = [&](std::uint8_t a, std::uint8_t b) {
        return std::lexicographical_compare(sig.begin() + a * width, sig.begin() + (a + 1) * width,
                                            sig.begin() + b * width, sig.begin() + (b + 1) * width);
      };
      Cells next;
      for (auto& cell : cells) {
        std::sort(cell.begin(), cell.end(), [&](auto a, auto b) {
          return less(a, b) || (!less(b, a) && a < b);
        });
        next.emplace_back(1, cell[0]);
        for (std::size_t i = 1; i < cell.size(); ++i) {
          if (less(cell[i - 1], cell[i])) next.emplace_back();
          next.back().push_back(cell[i]);
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  bool twins(std::size_t a, std::size_t b) const {
    for (std::size_t x = 0; x < n_; ++x)
      if (x != a && x != b && color(a, x) != color(b, x)) return false;
    return true;
  }

  void search(const Cells& cells) {
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const auto& cell = cells[target];
    std::vector<std::uint8_t> tried;
    for (auto v : cell) {
      bool skip = false;
      for (auto t : tried)
        if (twins(v, t)) {
          skip = true;
          break;
        }
      if (skip) continue;
      tried.push_back(v);
      Cells next;
      next.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          next.push_back(cells[c]);
          continue;
        }
        next.emplace_back(1, v);
        next.emplace_back();
        for (auto w : cell)
          if (w != v) next.back().push_back(w);
      }
      refine(next);
      search(next);
    }
  }

  void leaf(const Cells& cells) {
    std::vector<std::uint8_t> order(n_);
    for (std::size_t c = 0; c < n_; ++c) order[c] = cells[c][0];
    CanonCode code = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) code = code * 3 + color(order[i], order[j]);
    if (!have_ || code < best_.code) {
      have_ = true;
      best_.code = code;
      best_.label.assign(n_, 0);
      for (std::size_t c = 0; c < n_; ++c) best_.label[order[c]] = static_cast<std::uint8_t>(c);
    }
  }

  std::size_t n_;
  const std::vector<std::uint8_t>& col_;
  Canonical best_;
  bool have_ = false;
};

}  // namespace

Canonical canonical_form(std::size_t n, const std::vector<std::uint8_t>& colors) {
  if (n > kMaxCanonicalOrder)
    throw CapabilityError("canonical labeling supports at most " +
                          std::to_string(kMaxCanonicalOrder) + " vertices");
  if (colors.size() != n * n) throw InputError("canonical_form: color matrix has wrong size");
  if (n == 0) return {};
  return Labeler(n, colors).run();
}

Canonical canonical_form(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> colors(n * n, 0);
  for (const auto& e : g.edges()) colors[e.u * n + e.v] = colors[e.v * n + e.u] = 1;
  return canonical_form(n, colors);
}

}  // namespace cbgame

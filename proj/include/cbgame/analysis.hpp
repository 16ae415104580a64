#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbgame/graph.hpp"

namespace cbgame {

/// score ~ c * n^alpha, fitted by least squares on (log n, log score).
struct FitResult {
  double c = 0;
  double alpha = 0;
  double residual = 0;  // Euclidean norm of the log-space residuals
  std::size_t samples = 0;
};

FitResult fit_exponent(const std::vector<std::pair<double, double>>& points);

std::string fit_text(const FitResult& fit);
std::string fit_json(const FitResult& fit);

struct PairDensity {
  std::size_t s_size = 0;
  std::size_t t_size = 0;
  double density = 0;
  bool unbiased = false;
};

struct RegularityReport {
  double eps = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t min_degree = 0;
  double min_degree_bound = 0;  // (1/2 - eps) * (vertices on the other side)
  bool min_degree_ok = false;
  std::vector<PairDensity> pairs;

  std::size_t unbiased_count() const;
  double unbiased_fraction() const;
  /// Exact minimum-degree condition and at least `min_fraction` of the
  /// sampled pairs unbiased.
  bool passed(double min_fraction = 1.0) const;
  std::string text() const;
};

/// Exact minimum degree plus `trials` sampled disjoint pairs (S,T) with
/// |S| = |T| = ceil(eps*n)+1. With a frame, degrees are counted towards the
/// other side and S, T are drawn from the two sides.
RegularityReport epsilon_regularity_report(
    const SimpleGraph& g, double eps, std::size_t trials, std::uint64_t seed,
    const std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>& frame = std::nullopt);

// ------------------------------------------------------------ sweeps

struct SweepRow {
  std::size_t n = 0;
  std::string forbidden;
  std::string target;
  std::string constructor;
  std::string blocker;
  std::uint64_t seed = 0;
  std::size_t rounds = 0;
  std::uint64_t score = 0;
  double millis = 0;

  bool same_outcome(const SweepRow& o) const {
    return n == o.n && forbidden == o.forbidden && target == o.target &&
           constructor == o.constructor && blocker == o.blocker && seed == o.seed &&
           rounds == o.rounds && score == o.score;
  }
};

struct SweepConfig {
  std::vector<std::size_t> ns;
  std::string forbidden;
  std::string target;
  std::string constructor;
  std::string blocker;
  std::size_t reps = 1;
  std::uint64_t master_seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency
  bool progress = false;
};

/// One row per (n, repetition), rows ordered by n then repetition. Game i
/// uses derive_seed(master_seed, i), so rows do not depend on threading.
std::vector<SweepRow> score_table(const SweepConfig& config);

inline constexpr const char* kSweepHeader = "n,F,H,strategyC,strategyB,seed,rounds,score,millis";

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& is);

/// Mean score per n, ready for fit_exponent.
std::vector<std::pair<double, double>> mean_score_by_n(const std::vector<SweepRow>& rows);

}  // namespace cbgame

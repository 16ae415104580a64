#include "cbgame/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cbgame/errors.hpp"
#include "cbgame/rng.hpp"

namespace cbgame {

FitResult fit_exponent(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw InputError("fit_exponent needs at least 2 points");
  std::vector<double> x, y;
  for (const auto& [n, s] : points) {
    if (!(n > 0) || !(s > 0)) throw InputError("fit_exponent needs positive n and score");
    x.push_back(std::log(n));
    y.push_back(std::log(s));
  }
  const double m = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / m;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw InputError("fit_exponent needs at least two distinct n");
  FitResult out;
  out.alpha = sxy / sxx;
  const double intercept = my - out.alpha * mx;
  out.c = std::exp(intercept);
  double rss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (intercept + out.alpha * x[i]);
    rss += r * r;
  }
  out.residual = std::sqrt(rss);
  out.samples = x.size();
  return out;
}

std::string fit_text(const FitResult& fit) {
  std::ostringstream os;
  os << std::setprecision(10) << "c=" << fit.c << " alpha=" << fit.alpha
     << " residual=" << fit.residual << " samples=" << fit.samples;
  return os.str();
}

std::string fit_json(const FitResult& fit) {
  nlohmann::json j;
  j["c"] = fit.c;
  j["alpha"] = fit.alpha;
  j["residual"] = fit.residual;
  j["samples"] = fit.samples;
  return j.dump();
}

std::size_t RegularityReport::unbiased_count() const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const PairDensity& p) { return p.unbiased; }));
}

double RegularityReport::unbiased_fraction() const {
  if (pairs.empty()) return 0;
  return static_cast<double>(unbiased_count()) / static_cast<double>(pairs.size());
}

bool RegularityReport::passed(double min_fraction) const {
  return min_degree_ok && !pairs.empty() && unbiased_fraction() >= min_fraction;
}

std::string RegularityReport::text() const {
  std::ostringstream os;
  os << "eps=" << eps << " seed=" << seed << " min_degree=" << min_degree
     << " bound=" << min_degree_bound << (min_degree_ok ? " ok" : " FAIL") << '\n'
     << "sampled pairs=" << pairs.size() << " (sampling audit, not exhaustive)"
     << " unbiased=" << unbiased_count() << " fraction=" << unbiased_fraction() << '\n';
  return os.str();
}

RegularityReport epsilon_regularity_report(
    const SimpleGraph& g, double eps, std::size_t trials, std::uint64_t seed,
    const std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>& frame) {
  if (!(eps > 0) || !(eps < 0.5)) throw InputError("eps must lie in (0, 1/2)");
  if (trials == 0) throw InputError("trials must be positive");
  RegularityReport rep;
  rep.eps = eps;
  rep.seed = seed;
  rep.trials = trials;
  const std::size_t n = g.order();
  Rng rng(seed);

  std::vector<std::uint64_t> left_mask(g.words(), 0), right_mask(g.words(), 0);
  std::vector<Vertex> left, right;
  if (frame) {
    left = frame->first;
    right = frame->second;
    for (Vertex v : left) bits::set(left_mask, v);
    for (Vertex v : right) bits::set(right_mask, v);
    std::size_t md = SIZE_MAX;
    for (Vertex v : left) md = std::min(md, bits::count_and(g.row(v), right_mask));
    for (Vertex v : right) md = std::min(md, bits::count_and(g.row(v), left_mask));
    rep.min_degree = md == SIZE_MAX ? 0 : md;
    const double side = static_cast<double>(std::min(left.size(), right.size()));
    rep.min_degree_bound = (0.5 - eps) * side;
  } else {
    std::size_t md = n == 0 ? 0 : SIZE_MAX;
    for (Vertex v = 0; v < n; ++v) md = std::min(md, g.degree(v));
    rep.min_degree = md;
    rep.min_degree_bound = (0.5 - eps) * static_cast<double>(n);
    left.resize(n);
    std::iota(left.begin(), left.end(), Vertex{0});
  }
  rep.min_degree_ok = static_cast<double>(rep.min_degree) >= rep.min_degree_bound;

  const std::size_t scale = frame ? std::min(left.size(), right.size()) : n;
  const auto size = static_cast<std::size_t>(std::ceil(eps * static_cast<double>(scale))) + 1;
  const bool feasible = frame ? size <= left.size() && size <= right.size() : 2 * size <= n;
  if (!feasible) return rep;

  std::vector<std::uint64_t> t_mask(g.words());
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Vertex> s_side, t_side;
    if (frame) {
      auto a = left, b = right;
      shuffle_in_place(a, rng);
      shuffle_in_place(b, rng);
      s_side.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(size));
      t_side.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(size));
    } else {
      auto a = left;
      // Partial Fisher-Yates: first 2*size entries are a uniform sample.
      for (std::size_t i = 0; i < 2 * size; ++i) {
        const std::size_t j = i + uniform_below(rng, a.size() - i);
        std::swap(a[i], a[j]);
      }
      s_side.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(size));
      t_side.assign(a.begin() + static_cast<std::ptrdiff_t>(size),
                    a.begin() + static_cast<std::ptrdiff_t>(2 * size));
    }
    std::fill(t_mask.begin(), t_mask.end(), 0);
    for (Vertex v : t_side) bits::set(t_mask, v);
    std::size_t edges = 0;
    for (Vertex v : s_side) edges += bits::count_and(g.row(v), t_mask);
    PairDensity p;
    p.s_size = s_side.size();
    p.t_size = t_side.size();
    p.density = static_cast<double>(edges) / static_cast<double>(p.s_size * p.t_size);
    p.unbiased = std::abs(p.density - 0.5) <= eps;
    rep.pairs.push_back(p);
  }
  return rep;
}

}  // namespace cbgame

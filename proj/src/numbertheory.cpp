#include "cbgame/numbertheory.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "cbgame/constructions.hpp"
#include "cbgame/errors.hpp"

namespace cbgame {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, new_t = 1, r = n, new_r = mod(a, n);
  while (new_r) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InputError("no inverse");
  return mod(t, n);
}

bool constant_on(const Quad& x, unsigned mask) {
  std::optional<std::int64_t> v;
  for (unsigned i = 0; i < 4; ++i)
    if ((mask >> i) & 1U) {
      if (v && *v != x[i]) return false;
      v = x[i];
    }
  return true;
}

bool trivial_with(const std::vector<unsigned>& supports, const Quad& x, bool* single_clause) {
  for (unsigned s : supports) {
    const unsigned t = 0xFU & ~s;
    if (t == 0) continue;
    if (std::find(supports.begin(), supports.end(), t) == supports.end()) continue;
    if (constant_on(x, s) && constant_on(x, t)) return true;
  }
  if (supports.size() == 1 && constant_on(x, supports[0])) {
    if (single_clause) *single_clause = true;
    return true;
  }
  return false;
}

}  // namespace

std::vector<unsigned> zero_sum_supports(const Coeffs& c) {
  std::vector<unsigned> out;
  for (unsigned s = 1; s < 16; ++s) {
    std::int64_t sum = 0;
    bool nonzero = true;
    for (unsigned i = 0; i < 4; ++i)
      if ((s >> i) & 1U) {
        if (c[i] == 0) nonzero = false;
        sum += c[i];
      }
    if (nonzero && sum == 0) out.push_back(s);
  }
  return out;
}

bool is_trivial_solution(const Coeffs& c, const Quad& x) {
  if (c[0] + c[1] + c[2] + c[3] != 0) throw InputError("coefficients must sum to zero");
  if (c == Coeffs{0, 0, 0, 0}) throw InputError("coefficients must not all be zero");
  return trivial_with(zero_sum_supports(c), x, nullptr);
}

SidonCertificate is_k_fold_sidon(const std::vector<std::int64_t>& a, std::int64_t n,
                                 std::int64_t k, SidonDomain domain) {
  if (n < 1) throw InputError("modulus must be positive");
  if (k < 1) throw InputError("fold k must be >= 1");
  if (domain == SidonDomain::Cyclic)
    for (std::int64_t i = 1; i <= k; ++i)
      if (std::gcd(n, i) != 1)
        throw InputError("n=" + std::to_string(n) + " is not coprime to " + std::to_string(i));
  std::vector<char> member(static_cast<std::size_t>(n), 0);
  for (auto v : a) {
    if (v < 0 || v >= n) throw InputError("element " + std::to_string(v) + " out of range");
    if (member[static_cast<std::size_t>(v)]) throw InputError("duplicate element");
    member[static_cast<std::size_t>(v)] = 1;
  }
  SidonCertificate cert;
  cert.passed = true;
  auto record = [&](const Coeffs& c, const std::vector<unsigned>& supports, const Quad& x) {
    ++cert.solutions;
    bool single = false;
    if (trivial_with(supports, x, &single)) {
      ++cert.trivial;
      if (single) ++cert.single_set;
    } else if (cert.passed) {
      cert.passed = false;
      cert.witness = std::make_pair(c, x);
    }
  };
  for (std::int64_t c1 = -k; c1 <= k; ++c1)
    for (std::int64_t c2 = -k; c2 <= k; ++c2)
      for (std::int64_t c3 = -k; c3 <= k; ++c3) {
        const std::int64_t c4 = -(c1 + c2 + c3);
        if (c4 < -k || c4 > k) continue;
        if (c1 == 0 && c2 == 0 && c3 == 0 && c4 == 0) continue;
        ++cert.tuples;
        const Coeffs c{c1, c2, c3, c4};
        const auto supports = zero_sum_supports(c);
        const std::int64_t inv4 =
            (c4 != 0 && domain == SidonDomain::Cyclic) ? mod_inverse(c4, n) : 0;
        for (auto x1 : a)
          for (auto x2 : a)
            for (auto x3 : a) {
              const std::int64_t s = c1 * x1 + c2 * x2 + c3 * x3;
              if (c4 == 0) {
                const bool zero = domain == SidonDomain::Cyclic ? mod(s, n) == 0 : s == 0;
                if (!zero) continue;
                for (auto x4 : a) record(c, supports, Quad{x1, x2, x3, x4});
                continue;
              }
              std::int64_t x4;
              if (domain == SidonDomain::Cyclic) {
                x4 = mod(-s * inv4, n);
              } else {
                if (s % c4 != 0) continue;
                x4 = -s / c4;
                if (x4 < 0 || x4 >= n) continue;
              }
              if (member[static_cast<std::size_t>(x4)]) record(c, supports, Quad{x1, x2, x3, x4});
            }
      }
  return cert;
}

// ------------------------------------------------------------ Bose

namespace {

// GF(q^2) as GF(q)[t]/(t^2 + p1 t + p0).
struct Fq2 {
  std::int64_t q, p1, p0;

  using Elt = std::pair<std::int64_t, std::int64_t>;  // c0 + c1 t

  Elt mul(Elt x, Elt y) const {
    const std::int64_t a = x.first * y.first % q;
    const std::int64_t b = (x.first * y.second + x.second * y.first) % q;
    const std::int64_t c = x.second * y.second % q;  // coefficient of t^2
    return {mod(a - c * p0, q), mod(b - c * p1, q)};
  }

  Elt pow(Elt x, std::int64_t e) const {
    Elt r{1, 0};
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }
};

std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

KFoldSidonSet sidon_set(std::int64_t q) {
  if (q < 2 || !is_prime(static_cast<std::uint64_t>(q)))
    throw CapabilityError("sidon_set supports prime q only");
  // Irreducible t^2 + p1 t + p0: no root in GF(q).
  Fq2 field{q, 0, 0};
  bool found = false;
  for (std::int64_t p1 = 0; p1 < q && !found; ++p1)
    for (std::int64_t p0 = 1; p0 < q && !found; ++p0) {
      bool root = false;
      for (std::int64_t t = 0; t < q && !root; ++t) root = (t * t + p1 * t + p0) % q == 0;
      if (!root) {
        field = Fq2{q, p1, p0};
        found = true;
      }
    }
  const std::int64_t order = q * q - 1;
  const auto factors = prime_factors(order);
  Fq2::Elt theta{0, 0};
  for (std::int64_t c0 = 0; c0 < q; ++c0)
    for (std::int64_t c1 = 1; c1 < q; ++c1) {
      const Fq2::Elt cand{c0, c1};
      bool primitive = true;
      for (auto p : factors)
        if (field.pow(cand, order / p) == Fq2::Elt{1, 0}) {
          primitive = false;
          break;
        }
      if (primitive) {
        theta = cand;
        goto have_theta;
      }
    }
  throw InternalError("no primitive element found");
have_theta:
  KFoldSidonSet out;
  out.n = order;
  out.k = 1;
  Fq2::Elt power{1, 0};
  for (std::int64_t e = 0; e < order; ++e) {
    // theta^e - theta lies in GF(q) iff the t-coefficients agree.
    if (power.second == theta.second) out.elements.push_back(e);
    power = field.mul(power, theta);
  }
  out.certificate = is_k_fold_sidon(out.elements, out.n, 1);
  if (!out.certificate.passed) throw ConstructionError("Bose set failed verification");
  if (static_cast<std::int64_t>(out.elements.size()) < q)
    throw ConstructionError("Bose set smaller than q");
  out.reached_target = true;
  return out;
}

// ------------------------------------------------------------ greedy

KFoldSidonSet k_fold_sidon_greedy(std::int64_t n, std::int64_t k, std::size_t target_size,
                                  std::uint64_t budget, SidonDomain domain) {
  if (n < 3) throw InputError("k_fold_sidon_greedy needs n >= 3");
  KFoldSidonSet out;
  out.n = n;
  out.k = k;
  out.domain = domain;
  auto ok = [&](const std::vector<std::int64_t>& s) {
    return is_k_fold_sidon(s, n, k, domain).passed;
  };
  std::vector<std::int64_t> current;
  for (std::int64_t x = 0; x < n && current.size() < target_size; ++x) {
    current.push_back(x);
    if (!ok(current)) current.pop_back();
  }
  std::vector<std::int64_t> best = current;
  if (best.size() < target_size) {
    std::uint64_t nodes = 0;
    std::vector<std::int64_t> stack;
    // Depth-first over ascending extensions; stops at the node budget.
    auto dfs = [&](auto&& self, std::int64_t from) -> bool {
      if (stack.size() > best.size()) best = stack;
      if (best.size() >= target_size) return true;
      for (std::int64_t x = from; x < n; ++x) {
        if (++nodes > budget) return true;
        stack.push_back(x);
        if (ok(stack) && self(self, x + 1)) return true;
        stack.pop_back();
      }
      return false;
    };
    dfs(dfs, 0);
  }
  out.elements = best;
  out.certificate = is_k_fold_sidon(out.elements, n, k, domain);
  if (!out.certificate.passed) throw InternalError("greedy Sidon set failed certification");
  out.reached_target = out.elements.size() >= target_size;
  return out;
}

// ------------------------------------------------------------ hypergraph

bool is_sidon_integers(const std::vector<std::int64_t>& b) {
  std::set<std::int64_t> diffs;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (i != j && !diffs.insert(b[i] - b[j]).second) return false;
  return true;
}

bool hypergraph_girth_at_least(const Hypergraph5& h, std::size_t g) {
  if (g <= 2) return true;
  // Berge t-cycles are exactly the 2t-cycles of the vertex/edge incidence graph.
  const std::size_t nv = 5 * static_cast<std::size_t>(h.n);
  SimpleGraph inc(nv + h.edges.size());
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    for (std::size_t j = 0; j < 5; ++j)
      inc.add_edge(static_cast<Vertex>(h.vertex_id(j, h.edges[e][j])),
                   static_cast<Vertex>(nv + e));
  const std::size_t gi = girth(inc);
  return gi == 0 || gi >= 2 * g;
}

Hypergraph5 hypergraph_from_sidon(const KFoldSidonSet& a, const std::vector<std::int64_t>& b,
                                  std::int64_t n) {
  if (n < 3 || n % 2 == 0) throw InputError("hypergraph_from_sidon needs odd n >= 3");
  if (b.size() != 5) throw InputError("B must have 5 elements");
  if (!is_sidon_integers(b)) throw InputError("B is not a Sidon set");
  if (!a.certificate.passed) throw InputError("A is not certified");
  if (a.n != n) throw InputError("A lives in a different modulus");
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const std::int64_t d = std::abs(b[i] - b[j]);
      if (d > a.k) throw InputError("difference of B exceeds the fold of A");
      if (std::gcd(d, n) != 1) throw InputError("difference of B not coprime to n");
    }
  Hypergraph5 h;
  h.n = n;
  h.a = a.elements;
  h.b = b;
  for (auto slope : a.elements)
    for (std::int64_t t = 0; t < n; ++t) {
      std::array<std::int64_t, 5> e{};
      for (std::size_t j = 0; j < 5; ++j) e[j] = mod(t + slope * b[j], n);
      h.edges.push_back(e);
    }
  if (!hypergraph_girth_at_least(h, 5))
    throw ConstructionError("hypergraph from Sidon data has girth below 5");
  return h;
}

void write_hypergraph(std::ostream& os, const Hypergraph5& h) {
  os << Hypergraph5::r << ' ' << h.n << ' ' << h.edges.size() << '\n';
  for (const auto& e : h.edges) {
    for (std::size_t j = 0; j < 5; ++j) os << (j ? " " : "") << '(' << j << ',' << e[j] << ')';
    os << '\n';
  }
}

Hypergraph5 read_hypergraph(std::istream& is) {
  std::size_t r = 0, m = 0;
  Hypergraph5 h;
  if (!(is >> r >> h.n >> m) || r != 5 || h.n < 1)
    throw InputError("hypergraph file: bad header");
  std::string line;
  std::getline(is, line);
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::getline(is, line)) throw InputError("hypergraph file: truncated");
    std::array<std::int64_t, 5> e{};
    std::istringstream ls(line);
    for (std::size_t j = 0; j < 5; ++j) {
      char open = 0, comma = 0, close = 0;
      std::int64_t part = -1, res = -1;
      if (!(ls >> open >> part >> comma >> res >> close) || open != '(' || comma != ',' ||
          close != ')' || part != static_cast<std::int64_t>(j) || res < 0 || res >= h.n)
        throw InputError("hypergraph file: bad hyperedge line " + std::to_string(i + 1));
      e[j] = res;
    }
    h.edges.push_back(e);
  }
  return h;
}

}  // namespace cbgame

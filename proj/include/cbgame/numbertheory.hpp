#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cbgame {

/// Z_n (requires gcd(n,i)=1 for i in [k]) or plain integers below n.
enum class SidonDomain { Cyclic, Integers };

using Coeffs = std::array<std::int64_t, 4>;
using Quad = std::array<std::int64_t, 4>;

/// Triviality of a solution x of c1x1+c2x2+c3x3+c4x4 = 0. Requires
/// sum(c) = 0 and c != 0; throws InputError otherwise.
bool is_trivial_solution(const Coeffs& c, const Quad& x);

/// The zero-sum supports: nonempty S with sum_{i in S} c_i = 0 and c_i != 0
/// on S, as bitmasks over {0,1,2,3}.
std::vector<unsigned> zero_sum_supports(const Coeffs& c);

struct SidonCertificate {
  bool passed = false;
  std::uint64_t tuples = 0;      // coefficient tuples checked
  std::uint64_t solutions = 0;   // solutions found in A^4 over all tuples
  std::uint64_t trivial = 0;
  std::uint64_t single_set = 0;  // trivial only through the one-set clause
  std::optional<std::pair<Coeffs, Quad>> witness;  // first nontrivial solution
};

SidonCertificate is_k_fold_sidon(const std::vector<std::int64_t>& a, std::int64_t n,
                                 std::int64_t k, SidonDomain domain = SidonDomain::Cyclic);

struct KFoldSidonSet {
  std::int64_t n = 0;
  std::int64_t k = 0;
  SidonDomain domain = SidonDomain::Cyclic;
  std::vector<std::int64_t> elements;
  SidonCertificate certificate;
  bool reached_target = false;
};

/// Bose construction: q residues of Z_{q^2-1}. Prime q only.
KFoldSidonSet sidon_set(std::int64_t q);

/// Ascending greedy growth, then budgeted backtracking if short of target.
KFoldSidonSet k_fold_sidon_greedy(std::int64_t n, std::int64_t k, std::size_t target_size,
                                  std::uint64_t budget = 200000,
                                  SidonDomain domain = SidonDomain::Cyclic);

/// 5-partite 5-uniform hypergraph; vertex (part j, residue y).
struct Hypergraph5 {
  static constexpr std::size_t r = 5;
  std::int64_t n = 0;
  std::vector<std::array<std::int64_t, 5>> edges;  // residue per part
  std::vector<std::int64_t> a;                     // provenance
  std::vector<std::int64_t> b;

  std::size_t vertex_id(std::size_t part, std::int64_t residue) const {
    return part * static_cast<std::size_t>(n) + static_cast<std::size_t>(residue);
  }
};

/// Default part labels: differences all distinct and at most 12.
inline const std::vector<std::int64_t> kDefaultSidonB = {0, 1, 3, 7, 12};

bool is_sidon_integers(const std::vector<std::int64_t>& b);

/// Hyperedges {(j, t + a*b_j mod n)} for a in A, t in Z_n. The result is
/// certified to have girth >= 5; ConstructionError otherwise.
Hypergraph5 hypergraph_from_sidon(const KFoldSidonSet& a, const std::vector<std::int64_t>& b,
                                  std::int64_t n);

/// No Berge t-cycle for 2 <= t < g.
bool hypergraph_girth_at_least(const Hypergraph5& h, std::size_t g);

/// "5 n |E|" then one line of five "(part,residue)" per hyperedge.
void write_hypergraph(std::ostream& os, const Hypergraph5& h);
Hypergraph5 read_hypergraph(std::istream& is);

}  // namespace cbgame

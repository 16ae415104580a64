#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cbgame/analysis.hpp"
#include "cbgame/constructions.hpp"
#include "cbgame/errors.hpp"
#include "cbgame/numbertheory.hpp"
#include "cbgame/solver.hpp"
#include "cbgame/strategies.hpp"
#include "cbgame/transcript.hpp"

using namespace cbgame;

namespace {

struct Flags {
  std::size_t n = 0;
  std::vector<std::size_t> nlist;
  std::string h = "k3";
  std::string f = "c4";
  std::string c = "random";
  std::string b = "random";
  std::uint64_t seed = 0;
  std::size_t reps = 1;
  std::uint64_t budget = 0;
  double eps = 0.1;
  std::int64_t k = 2;
  std::int64_t fold = 12;  // hypergraph: must cover the differences of B
  std::size_t trials = 200;
  std::size_t target = 0;
  std::string in;
  std::string out;
};

/// Writes to --out when given, stdout otherwise.
template <class F>
void emit(const Flags& fl, F&& body) {
  if (fl.out.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream os(fl.out);
  if (!os) throw InputError("cannot write " + fl.out);
  body(os);
}

std::ifstream open_in(const Flags& fl) {
  if (fl.in.empty()) throw InputError("--in is required");
  std::ifstream is(fl.in);
  if (!is) throw InputError("cannot read " + fl.in);
  return is;
}

int cmd_solve(const Flags& fl) {
  const PatternGraph h = PatternGraph::parse(fl.h), f = PatternGraph::parse(fl.f);
  SolveOptions opt;
  opt.budget = fl.budget;
  opt.threads = std::max(1u, std::thread::hardware_concurrency());
  std::cerr << "[solve] n=" << fl.n << " H=" << h.spec() << " F=" << f.spec() << '\n';
  const SolveResult r = exact_game_value(fl.n, h, f, opt);
  std::cout << "# n=" << fl.n << " H=" << h.spec() << " F=" << f.spec() << " budget=" << fl.budget
            << '\n';
  if (r.exact)
    std::cout << "value " << r.lower << '\n';
  else
    std::cout << "bounds " << r.lower << ' ' << r.upper << '\n';
  std::cout << "nodes " << r.nodes << " stored " << r.stored << '\n';
  if (!fl.out.empty()) {
    PolicyObjective obj;
    obj.min_score = static_cast<std::uint64_t>(std::max<std::int64_t>(r.lower, 1));
    const PolicyResult p = derive_policy(fl.n, h, f, obj);
    if (!p.achieved) throw InternalError("policy search disagrees with the game value");
    emit(fl, [&](std::ostream& os) { p.table.write(os); });
    std::cerr << "[solve] policy with " << p.table.size() << " entries written to " << fl.out
              << '\n';
  }
  return 0;
}

int cmd_simulate(const Flags& fl) {
  const PatternGraph h = PatternGraph::parse(fl.h), f = PatternGraph::parse(fl.f);
  auto c = make_constructor(fl.c);
  auto b = make_blocker(fl.b, h);
  const GameResult r = run_game(fl.n, f, h, *c, *b, fl.seed);
  std::cout << "# n=" << fl.n << " H=" << h.spec() << " F=" << f.spec() << " C=" << fl.c
            << " B=" << fl.b << " seed=" << fl.seed << '\n';
  std::cout << "score " << r.score.value << "\nrounds " << r.rounds << "\nend "
            << end_reason_name(r.reason) << "\nmillis " << r.millis << '\n';
  if (!fl.out.empty()) emit(fl, [&](std::ostream& os) { os << transcript_text(r); });
  return 0;
}

int cmd_sweep(const Flags& fl) {
  SweepConfig cfg;
  cfg.ns = fl.nlist;
  if (cfg.ns.empty() && fl.n) cfg.ns.push_back(fl.n);
  cfg.forbidden = fl.f;
  cfg.target = fl.h;
  cfg.constructor = fl.c;
  cfg.blocker = fl.b;
  cfg.reps = fl.reps;
  cfg.master_seed = fl.seed;
  cfg.progress = true;
  const auto rows = score_table(cfg);
  emit(fl, [&](std::ostream& os) { write_sweep_csv(os, rows); });
  return 0;
}

int cmd_sidon(const Flags& fl) {
  const std::size_t target = fl.target ? fl.target : static_cast<std::size_t>(fl.n);
  const KFoldSidonSet s =
      k_fold_sidon_greedy(static_cast<std::int64_t>(fl.n), fl.k, target, fl.budget ? fl.budget : 200000);
  const auto& cert = s.certificate;
  std::cout << "# n=" << fl.n << " k=" << fl.k << " target=" << target << '\n' << "set";
  for (auto x : s.elements) std::cout << ' ' << x;
  std::cout << "\nsize " << s.elements.size() << (s.reached_target ? " (target reached)" : "")
            << "\ncertificate " << (cert.passed ? "passed" : "failed") << " tuples=" << cert.tuples
            << " solutions=" << cert.solutions << " trivial=" << cert.trivial
            << " single_set=" << cert.single_set << '\n';
  return cert.passed ? 0 : 1;
}

int cmd_hypergraph(const Flags& fl) {
  const auto p = static_cast<std::int64_t>(fl.n);
  const std::size_t target = fl.target ? fl.target : fl.n;
  std::cerr << "[hypergraph] greedy " << fl.fold << "-fold Sidon set mod " << p << '\n';
  const KFoldSidonSet a = k_fold_sidon_greedy(p, fl.fold, target, fl.budget);
  const Hypergraph5 h = hypergraph_from_sidon(a, kDefaultSidonB, p);
  std::cerr << "[hypergraph] |A|=" << a.elements.size() << " |E|=" << h.edges.size()
            << " girth>=5 certified\n";
  emit(fl, [&](std::ostream& os) { write_hypergraph(os, h); });
  return 0;
}

int cmd_fit(const Flags& fl) {
  auto is = open_in(fl);
  const auto rows = read_sweep_csv(is);
  const FitResult fit = fit_exponent(mean_score_by_n(rows));
  std::cout << fit_text(fit) << '\n' << fit_json(fit) << '\n';
  return 0;
}

int cmd_check_regularity(const Flags& fl) {
  SimpleGraph g;
  if (!fl.in.empty()) {
    g = read_edge_list_file(fl.in);
  } else {
    if (fl.n < 2) throw InputError("check-regularity needs --in or --n");
    std::cerr << "[check-regularity] simulating JumbleG on n=" << fl.n << '\n';
    g = simulate_jumbleg(fl.n, JumbleFrame::whole(fl.n), fl.seed);
  }
  const RegularityReport rep = epsilon_regularity_report(g, fl.eps, fl.trials, fl.seed);
  std::cout << rep.text() << (rep.passed() ? "passed\n" : "failed\n");
  return 0;
}

// Small brute-force cross-checks of the core kernels.
int cmd_selftest(const Flags& fl) {
  Rng rng(fl.seed);
  std::size_t failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
    failures += !ok;
  };
  {
    bool ok = true;
    const std::vector<std::string> pats = {"k3", "c4", "c5", "k4", "k2,3"};
    for (int t = 0; t < 100 && ok; ++t) {
      const std::size_t n = 4 + uniform_below(rng, 5);
      SimpleGraph g(n);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (uniform_below(rng, 2)) g.add_edge(u, v);
      for (const auto& p : pats) {
        const PatternGraph h = PatternGraph::parse(p);
        ok &= count_copies(g, h) == count_copies_generic(g, h.graph());
      }
    }
    check(ok, "specialized counters match backtracking on 100 random graphs");
  }
  {
    bool ok = true;
    for (std::size_t s = 3; s <= 5; ++s)
      for (std::size_t r = 2; r < s; ++r)
        for (std::size_t n = s - 1; n <= 10; ++n)
          ok &= zykov_count(n, r, s) == count_copies(turan_graph(n, s - 1), PatternGraph::clique(r));
    check(ok, "clique counts of Turan graphs");
  }
  {
    bool ok = true;
    const std::vector<std::string> pats = {"k2", "k3", "c4"};
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& hs : pats)
        for (const auto& fs : pats) {
          const PatternGraph h = PatternGraph::parse(hs), f = PatternGraph::parse(fs);
          const auto v = exact_game_value(n, h, f);
          ok &= v.exact && static_cast<std::uint64_t>(v.lower) <= brute_force_ex(n, h, f);
        }
    check(ok, "game value <= extremal number for n <= 4");
  }
  {
    const auto s = sidon_set(5);
    check(is_k_fold_sidon(s.elements, s.n, 1).passed && s.elements.size() == 5, "Bose Sidon set for q=5");
  }
  std::cout << (failures ? "selftest failed\n" : "selftest passed\n");
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructor-Blocker game toolkit"};
  app.set_help_flag("--help", "print usage");
  app.require_subcommand(1);
  Flags fl;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", fl.seed, "master seed");
    sub->add_option("--out", fl.out, "output file");
  };
  auto add_game = [&](CLI::App* sub) {
    sub->add_option("--h", fl.h, "target pattern (k3, c5, k2,2, explicit:@file)");
    sub->add_option("--f", fl.f, "forbidden pattern");
  };

  auto* solve = app.add_subcommand("solve", "exact game value on a small board");
  solve->add_option("--n", fl.n)->required();
  solve->add_option("--budget", fl.budget, "node budget, 0 = unlimited");
  add_game(solve);
  add_common(solve);

  auto* sim = app.add_subcommand("simulate", "play one game");
  sim->add_option("--n", fl.n)->required();
  sim->add_option("--c", fl.c, "constructor strategy");
  sim->add_option("--b", fl.b, "blocker strategy");
  add_game(sim);
  add_common(sim);

  auto* sweep = app.add_subcommand("sweep", "score table over board sizes");
  sweep->add_option("--n", fl.n);
  sweep->add_option("--nlist", fl.nlist)->delimiter(',');
  sweep->add_option("--c", fl.c);
  sweep->add_option("--b", fl.b);
  sweep->add_option("--reps", fl.reps);
  add_game(sweep);
  add_common(sweep);

  auto* sidon = app.add_subcommand("sidon", "greedy k-fold Sidon set with certificate");
  sidon->add_option("--n", fl.n)->required();
  sidon->add_option("--k", fl.k);
  sidon->add_option("--target", fl.target);
  sidon->add_option("--budget", fl.budget, "backtracking budget");
  add_common(sidon);

  auto* hyper = app.add_subcommand("hypergraph", "5-partite girth-5 hypergraph");
  hyper->add_option("--n", fl.n, "odd prime modulus")->required();
  hyper->add_option("--k", fl.fold, "fold of the Sidon set (default 12)");
  hyper->add_option("--target", fl.target);
  hyper->add_option("--budget", fl.budget, "backtracking budget");
  add_common(hyper);

  auto* fit = app.add_subcommand("fit", "power-law fit of a sweep CSV");
  fit->add_option("--in", fl.in)->required();

  auto* reg = app.add_subcommand("check-regularity", "epsilon-regularity audit");
  reg->add_option("--in", fl.in, "edge-list file; omit to simulate JumbleG");
  reg->add_option("--n", fl.n);
  reg->add_option("--eps", fl.eps);
  reg->add_option("--trials", fl.trials);
  add_common(reg);

  auto* self = app.add_subcommand("selftest", "brute-force oracle suite");
  self->add_option("--seed", fl.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(fl);
    if (sim->parsed()) return cmd_simulate(fl);
    if (sweep->parsed()) return cmd_sweep(fl);
    if (sidon->parsed()) return cmd_sidon(fl);
    if (hyper->parsed()) return cmd_hypergraph(fl);
    if (fit->parsed()) return cmd_fit(fl);
    if (reg->parsed()) return cmd_check_regularity(fl);
    if (self->parsed()) return cmd_selftest(fl);
  } catch (const CapabilityError& e) {
    std::cerr << "capability: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

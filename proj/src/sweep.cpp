#include <algorithm>
#include <atomic>
#include <exception>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "cbgame/analysis.hpp"
#include "cbgame/errors.hpp"
#include "cbgame/game.hpp"
#include "cbgame/rng.hpp"
#include "cbgame/strategies.hpp"

namespace cbgame {

std::vector<SweepRow> score_table(const SweepConfig& config) {
  if (config.ns.empty()) throw ConfigError("sweep needs at least one n");
  if (config.reps == 0) throw ConfigError("sweep needs reps >= 1");
  const PatternGraph f = PatternGraph::parse(config.forbidden);
  const PatternGraph h = PatternGraph::parse(config.target);
  // Fail fast on bad names before any thread starts.
  (void)make_constructor(config.constructor);
  (void)make_blocker(config.blocker, h);

  const std::size_t total = config.ns.size() * config.reps;
  std::vector<SweepRow> rows(total);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex err_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      {
        std::lock_guard lock(err_mutex);
        if (error) return;
      }
      try {
        const std::size_t n = config.ns[i / config.reps];
        const std::uint64_t seed = derive_seed(config.master_seed, i);
        auto c = make_constructor(config.constructor);
        auto b = make_blocker(config.blocker, h);
        const GameResult r = run_game(n, f, h, *c, *b, seed);
        SweepRow& row = rows[i];
        row.n = n;
        row.forbidden = f.spec();
        row.target = h.spec();
        row.constructor = config.constructor;
        row.blocker = config.blocker;
        row.seed = seed;
        row.rounds = r.rounds;
        row.score = r.score.value;
        row.millis = r.millis;
        const std::size_t d = ++done;
        if (config.progress) {
          std::lock_guard lock(err_mutex);
          std::cerr << "[sweep] " << d << '/' << total << " n=" << n << " score=" << row.score
                    << '\n';
        }
      } catch (...) {
        std::lock_guard lock(err_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  if (quoted) throw InputError("unterminated quote in CSV line: " + line);
  return out;
}

template <class T>
T parse_number(const std::string& s, const char* what) {
  std::istringstream is(s);
  T v{};
  if (!(is >> v) || !is.eof()) throw InputError(std::string("bad ") + what + " in CSV: '" + s + "'");
  return v;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepHeader << '\n';
  for (const auto& r : rows)
    os << r.n << ',' << csv_field(r.forbidden) << ',' << csv_field(r.target) << ','
       << csv_field(r.constructor) << ',' << csv_field(r.blocker) << ',' << r.seed << ','
       << r.rounds << ',' << r.score << ',' << r.millis << '\n';
}

std::vector<SweepRow> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kSweepHeader)
    throw InputError(std::string("sweep CSV must start with the header ") + kSweepHeader);
  std::vector<SweepRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 9) throw InputError("sweep CSV row needs 9 fields: " + line);
    SweepRow r;
    r.n = parse_number<std::size_t>(f[0], "n");
    r.forbidden = f[1];
    r.target = f[2];
    r.constructor = f[3];
    r.blocker = f[4];
    r.seed = parse_number<std::uint64_t>(f[5], "seed");
    r.rounds = parse_number<std::size_t>(f[6], "rounds");
    r.score = parse_number<std::uint64_t>(f[7], "score");
    r.millis = parse_number<double>(f[8], "millis");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::pair<double, double>> mean_score_by_n(const std::vector<SweepRow>& rows) {
  std::map<std::size_t, std::pair<double, std::size_t>> acc;
  for (const auto& r : rows) {
    auto& a = acc[r.n];
    a.first += static_cast<double>(r.score);
    ++a.second;
  }
  std::vector<std::pair<double, double>> out;
  for (const auto& [n, a] : acc)
    out.emplace_back(static_cast<double>(n), a.first / static_cast<double>(a.second));
  return out;
}

}  // namespace cbgame

#include "cbgame/transcript.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "cbgame/errors.hpp"
#include "json.hpp"

namespace cbgame {

using nlohmann::json;

void write_transcript(std::ostream& os, const GameHeader& h, const std::vector<Move>& moves) {
  json head = {{"n", h.n},           {"F", h.forbidden},           {"H", h.target},
               {"seed", h.seed},     {"constructor", h.constructor}, {"blocker", h.blocker}};
  os << head.dump() << '\n';
  for (const auto& m : moves) {
    json rec = {{"round", m.round},
                {"player", std::string(1, player_code(m.player))},
                {"u", m.edge.u},
                {"v", m.edge.v},
                {"tag", m.tag}};
    os << rec.dump() << '\n';
  }
}

std::string transcript_text(const GameResult& result) {
  std::ostringstream os;
  write_transcript(os, result.header, result.moves());
  return os.str();
}

Transcript read_transcript(std::istream& is) {
  Transcript t;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  try {
    while (std::getline(is, line)) {
      ++lineno;
      if (line.empty()) continue;
      const json j = json::parse(line);
      if (!have_header) {
        t.header.n = j.at("n").get<std::size_t>();
        t.header.forbidden = j.at("F").get<std::string>();
        t.header.target = j.at("H").get<std::string>();
        t.header.seed = j.at("seed").get<std::uint64_t>();
        t.header.constructor = j.at("constructor").get<std::string>();
        t.header.blocker = j.at("blocker").get<std::string>();
        have_header = true;
        continue;
      }
      Move m;
      m.round = j.at("round").get<std::size_t>();
      const auto p = j.at("player").get<std::string>();
      if (p != "C" && p != "B") throw InputError("bad player '" + p + "'");
      m.player = p == "C" ? Player::Constructor : Player::Blocker;
      m.edge = Edge(j.at("u").get<Vertex>(), j.at("v").get<Vertex>());
      m.tag = j.at("tag").get<std::string>();
      t.moves.push_back(std::move(m));
    }
  } catch (const json::exception& e) {
    throw InputError("transcript line " + std::to_string(lineno) + ": " + e.what());
  }
  if (!have_header) throw InputError("transcript has no header");
  return t;
}

GameState replay(const Transcript& t) {
  GameState state(t.header.n, PatternGraph::parse(t.header.forbidden), t.header.seed);
  for (const auto& m : t.moves) {
    if (m.player != state.to_move())
      throw RuleViolation(Rule::WrongTurn, "transcript move out of turn");
    if (m.round != state.next_round())
      throw InputError("transcript round mismatch at round " + std::to_string(m.round));
    state.play(m.edge, m.tag);
  }
  return state;
}

}  // namespace cbgame

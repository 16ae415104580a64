#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cbgame/game.hpp"

namespace cbgame {

struct Transcript {
  GameHeader header;
  std::vector<Move> moves;
};

/// Line-delimited JSON: one header object, then one object per move
/// {"round","player":"C"|"B","u","v","tag"}.
void write_transcript(std::ostream& os, const GameHeader& header, const std::vector<Move>& moves);
std::string transcript_text(const GameResult& result);

/// Throws InputError on malformed records.
Transcript read_transcript(std::istream& is);

/// Re-applies every move with full rule checking.
GameState replay(const Transcript& t);

}  // namespace cbgame

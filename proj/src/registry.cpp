#include <map>
#include <sstream>

#include "cbgame/errors.hpp"
#include "cbgame/strategies.hpp"

namespace cbgame {
namespace {

struct ParsedName {
  std::string base;
  std::map<std::string, std::size_t> params;
};

ParsedName parse_name(const std::string& name) {
  ParsedName out;
  const auto colon = name.find(':');
  out.base = name.substr(0, colon);
  if (colon == std::string::npos) return out;
  std::stringstream rest(name.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw ConfigError("bad strategy parameter '" + item + "' in '" + name + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size()) throw ConfigError("parameter " + key + " is not a number: " + value);
    if (!out.params.emplace(key, v).second) throw ConfigError("repeated parameter " + key);
  }
  return out;
}

std::size_t take(ParsedName& p, const std::string& key, std::optional<std::size_t> fallback,
                 const std::string& name) {
  const auto it = p.params.find(key);
  if (it == p.params.end()) {
    if (!fallback) throw ConfigError("strategy '" + name + "' needs parameter " + key);
    return *fallback;
  }
  const std::size_t v = it->second;
  p.params.erase(it);
  return v;
}

void finish(const ParsedName& p, const std::string& name) {
  if (!p.params.empty())
    throw ConfigError("unknown parameter " + p.params.begin()->first + " in '" + name + "'");
}

}  // namespace

std::unique_ptr<Strategy> make_constructor(const std::string& name) {
  ParsedName p = parse_name(name);
  std::unique_ptr<Strategy> out;
  if (p.base == "partite-jumbleg") {
    out = partite_jumbleg_constructor(take(p, "s", std::nullopt, name));
  } else if (p.base == "blowup-cycle") {
    out = blowup_cycle_constructor(take(p, "k", 2, name));
  } else if (p.base == "three-phase") {
    out = three_phase_constructor(take(p, "k", 2, name));
  } else if (p.base == "half-blowup") {
    const std::size_t l = take(p, "l", std::nullopt, name);
    out = half_blowup_constructor(l, take(p, "k", std::nullopt, name));
  } else if (p.base == "hypergraph") {
    out = hypergraph_constructor(take(p, "k", 12, name));
  } else if (p.base == "random") {
    out = random_strategy();
  } else {
    throw ConfigError("unknown constructor strategy '" + name + "'");
  }
  finish(p, name);
  return out;
}

std::unique_ptr<Strategy> make_blocker(const std::string& name, const PatternGraph& h) {
  const ParsedName p = parse_name(name);
  finish(p, name);
  if (p.base == "random") return random_strategy();
  if (p.base == "greedy") return greedy_blocker(h);
  if (p.base == "jumbleg-blocker") return jumbleg_blocker();
  if (p.base == "fuzz") return fuzz_blocker(h);
  throw ConfigError("unknown blocker strategy '" + name + "'");
}

}  // namespace cbgame

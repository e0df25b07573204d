#include "supermod/game_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "supermod/error.hpp"

namespace supermod {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(Errc::kParseError, "at " + where + ": " + what);
}

std::string pointer(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) out += "/" + p;
  return out;
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where.empty() ? "/" : where, "missing key \"" + key + "\"");
  return *it;
}

std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> strings_at(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(string_at(v[k], where + "/" + std::to_string(k)));
  return out;
}

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known |= it.key() == k;
    if (!known) bad(where.empty() ? "/" : where, "unexpected key \"" + it.key() + "\"");
  }
}

Poset load_strategies(const json& spec, const std::string& where) {
  if (!spec.is_object()) bad(where, "expected an object with \"elements\" and \"order\"");
  only_keys(spec, {"elements", "order"}, where);
  auto elements = strings_at(member(spec, "elements", where), where + "/elements");
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].empty() || elements[k].find('|') != std::string::npos) {
      bad(where + "/elements/" + std::to_string(k), "strategy names must be nonempty and must not contain '|'");
    }
  }
  const json& order = member(spec, "order", where);
  if (!order.is_array()) bad(where + "/order", "expected an array of pairs");
  std::vector<OrderPair> pairs;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::string at = where + "/order/" + std::to_string(k);
    auto pair = strings_at(order[k], at);
    if (pair.size() != 2) bad(at, "an order pair has exactly two entries");
    pairs.emplace_back(pair[0], pair[1]);
  }
  try {
    return Poset::build(std::move(elements), pairs);
  } catch (const Error& e) {
    throw Error(e.code(), "at " + where + ": " + e.what());
  }
}

}  // namespace

Game load_game(std::string_view document, const Limits& limits) {
  json doc;
  // nlohmann keeps the last of repeated keys; a game document rejects them.
  std::vector<std::set<std::string>> keys_seen;
  const json::parser_callback_t reject_repeated_keys = [&](int, json::parse_event_t event, json& parsed) {
    if (event == json::parse_event_t::object_start) keys_seen.emplace_back();
    if (event == json::parse_event_t::object_end) keys_seen.pop_back();
    if (event == json::parse_event_t::key && !keys_seen.back().insert(parsed.get<std::string>()).second) {
      fail(Errc::kParseError, "repeated key \"" + parsed.get<std::string>() + "\"");
    }
    return true;
  };
  try {
    doc = json::parse(document.begin(), document.end(), reject_repeated_keys);
  } catch (const json::parse_error& e) {
    fail(Errc::kParseError, e.what());
  }
  if (!doc.is_object()) bad("/", "a game document is a JSON object");
  only_keys(doc, {"name", "players", "strategies", "feasible", "payoffs"}, "");

  std::string name;
  if (doc.contains("name")) name = string_at(doc["name"], "/name");
  const auto players = strings_at(member(doc, "players", ""), "/players");
  if (players.empty()) bad("/players", "at least one player is required");

  const json& strategies_doc = member(doc, "strategies", "");
  if (!strategies_doc.is_object()) bad("/strategies", "expected an object keyed by player");
  std::vector<Poset> strategies;
  for (const auto& p : players) {
    strategies.push_back(load_strategies(member(strategies_doc, p, "/strategies"), pointer({"strategies", p})));
  }
  for (auto it = strategies_doc.begin(); it != strategies_doc.end(); ++it) {
    if (std::find(players.begin(), players.end(), it.key()) == players.end()) {
      bad("/strategies/" + it.key(), "unknown player");
    }
  }

  std::optional<std::vector<Profile>> feasible;
  const json& feasible_doc = member(doc, "feasible", "");
  if (feasible_doc.is_string()) {
    if (feasible_doc.get<std::string>() != "product") bad("/feasible", "expected \"product\" or a list of profiles");
  } else if (feasible_doc.is_array()) {
    feasible.emplace();
    for (std::size_t k = 0; k < feasible_doc.size(); ++k) {
      const std::string at = "/feasible/" + std::to_string(k);
      const auto names = strings_at(feasible_doc[k], at);
      if (names.size() != players.size()) bad(at, "a profile names one strategy per player");
      Profile prof(players.size());
      for (std::size_t i = 0; i < players.size(); ++i) {
        auto s = strategies[i].find(names[i]);
        if (!s) bad(at + "/" + std::to_string(i), "unknown strategy '" + names[i] + "' of player '" + players[i] + "'");
        prof[i] = *s;
      }
      feasible->push_back(std::move(prof));
    }
  } else {
    bad("/feasible", "expected \"product\" or a list of profiles");
  }

  const json& payoffs_doc = member(doc, "payoffs", "");
  if (!payoffs_doc.is_object()) bad("/payoffs", "expected an object keyed by player");
  for (auto it = payoffs_doc.begin(); it != payoffs_doc.end(); ++it) {
    if (std::find(players.begin(), players.end(), it.key()) == players.end()) {
      bad("/payoffs/" + it.key(), "unknown player");
    }
  }
  // Payoff tables keyed by strategy-index profile.
  std::vector<std::map<Profile, Rational>> tables(players.size());
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string where = pointer({"payoffs", players[i]});
    const json& table = member(payoffs_doc, players[i], "/payoffs");
    if (!table.is_object()) bad(where, "expected an object keyed by profile");
    for (auto it = table.begin(); it != table.end(); ++it) {
      const std::string at = where + "/" + it.key();
      Profile prof;
      std::stringstream parts(it.key());
      std::string part;
      std::size_t j = 0;
      while (std::getline(parts, part, '|')) {
        if (j >= players.size()) bad(at, "profile key has too many strategies");
        auto s = strategies[j].find(part);
        if (!s) bad(at, "unknown strategy '" + part + "' of player '" + players[j] + "'");
        prof.push_back(*s);
        ++j;
      }
      if (prof.size() != players.size()) bad(at, "profile key names one strategy per player");
      if (!it.value().is_string()) bad(at, "payoffs are strings such as \"3\", \"-1/2\" or \"0.25\"");
      try {
        tables[i].emplace(std::move(prof), parse_rational(it.value().get<std::string>()));
      } catch (const Error& e) {
        bad(at, e.what());
      }
    }
  }

  PayoffFn payoff = [&](std::size_t player, const Profile& prof) -> std::optional<Rational> {
    auto it = tables[player].find(prof);
    if (it == tables[player].end()) return std::nullopt;
    return it->second;
  };
  Game game(std::move(name), players, std::move(strategies), std::move(feasible), payoff, limits);

  for (std::size_t i = 0; i < players.size(); ++i) {
    for (const auto& [prof, value] : tables[i]) {
      if (!game.contains(game.profile_id(prof))) {
        bad(pointer({"payoffs", players[i], game.profile_key(game.profile_id(prof))}), "payoff given for an infeasible profile");
      }
    }
  }
  return game;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::kIoError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(Errc::kIoError, "cannot read '" + path.string() + "'");
  return buffer.str();
}

Game load_game_file(const std::filesystem::path& path, const Limits& limits) {
  return load_game(read_text_file(path), limits);
}

std::string serialize_game(const Game& g) {
  nlohmann::ordered_json doc;
  if (!g.name().empty()) doc["name"] = g.name();
  doc["players"] = g.players();
  nlohmann::ordered_json strategies = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < g.player_count(); ++i) {
    const Poset& s = g.strategies(i);
    nlohmann::ordered_json order = nlohmann::ordered_json::array();
    for (auto [a, b] : hasse_edges(s)) order.push_back({s.name(a), s.name(b)});
    strategies[g.players()[i]] = {{"elements", s.names()}, {"order", order}};
  }
  doc["strategies"] = strategies;
  if (g.is_product_form()) {
    doc["feasible"] = "product";
  } else {
    nlohmann::ordered_json profiles = nlohmann::ordered_json::array();
    for (Elem id : g.feasible()) {
      nlohmann::ordered_json names = nlohmann::ordered_json::array();
      const Profile p = g.profile(id);
      for (std::size_t i = 0; i < p.size(); ++i) names.push_back(g.strategies(i).name(p[i]));
      profiles.push_back(names);
    }
    doc["feasible"] = profiles;
  }
  nlohmann::ordered_json payoffs = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < g.player_count(); ++i) {
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    for (Elem id : g.feasible()) table[g.profile_key(id)] = format_rational(g.payoff(i, id));
    payoffs[g.players()[i]] = table;
  }
  doc["payoffs"] = payoffs;
  return doc.dump(2) + "\n";
}

}  // namespace supermod

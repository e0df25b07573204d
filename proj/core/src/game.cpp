#include "supermod/game.hpp"

#include <algorithm>
#include <set>

#include "supermod/error.hpp"

namespace supermod {

namespace {

std::vector<Elem> all_elements(std::size_t n) {
  std::vector<Elem> out(n);
  for (Elem e = 0; e < n; ++e) out[e] = e;
  return out;
}

Poset checked_space(const std::vector<std::string>& players, const std::vector<Poset>& strategies,
                    const Limits& limits) {
  if (players.empty()) fail(Errc::kEmptySet, "a game needs at least one player");
  if (strategies.size() != players.size()) fail(Errc::kInvalidArgument, "one strategy set per player required");
  std::set<std::string> seen;
  for (const auto& p : players) {
    if (!seen.insert(p).second) fail(Errc::kDuplicateElement, "player '" + p + "' listed twice");
  }
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (!is_lattice(strategies[i])) {
      fail(Errc::kNotALattice, "strategy set of player '" + players[i] + "' is not a lattice");
    }
  }
  return product_poset(strategies, limits.product_cap);
}

}  // namespace

Game::Game(std::string name, std::vector<std::string> players, std::vector<Poset> strategies,
           std::optional<std::vector<Profile>> feasible, const PayoffFn& payoff, const Limits& limits)
    : name_(std::move(name)),
      players_(std::move(players)),
      strategies_(std::move(strategies)),
      space_(checked_space(players_, strategies_, limits)) {
  if (!feasible) {
    feasible_ = all_elements(space_.size());
  } else {
    if (feasible->empty()) fail(Errc::kEmptySet, "feasible set is empty");
    for (const Profile& p : *feasible) {
      if (p.size() != players_.size()) fail(Errc::kInvalidArgument, "profile has the wrong number of strategies");
      feasible_.push_back(space_.compose(p));
    }
    std::sort(feasible_.begin(), feasible_.end());
    if (auto dup = std::adjacent_find(feasible_.begin(), feasible_.end()); dup != feasible_.end()) {
      fail(Errc::kDuplicateProfile, "profile " + space_.name(*dup) + " listed twice");
    }
  }

  rank_.assign(space_.size(), -1);
  for (std::size_t k = 0; k < feasible_.size(); ++k) rank_[feasible_[k]] = static_cast<std::int32_t>(k);

  for (std::size_t i = 0; i < players_.size(); ++i) {
    std::vector<bool> used(strategies_[i].size(), false);
    for (Elem id : feasible_) used[space_.coordinates(id)[i]] = true;
    for (Elem s = 0; s < used.size(); ++s) {
      if (!used[s]) {
        fail(Errc::kNonSurjectiveProjection, "no feasible profile uses strategy '" + strategies_[i].name(s) +
                                                 "' of player '" + players_[i] + "'");
      }
    }
  }

  payoffs_.assign(players_.size(), {});
  for (std::size_t i = 0; i < players_.size(); ++i) {
    payoffs_[i].reserve(feasible_.size());
    for (Elem id : feasible_) {
      auto value = payoff(i, space_.coordinates(id));
      if (!value) {
        fail(Errc::kMissingPayoff, "player '" + players_[i] + "' has no payoff at " + space_.name(id));
      }
      payoffs_[i].push_back(std::move(*value));
    }
  }
}

std::size_t Game::player_index(std::string_view player) const {
  auto it = std::find(players_.begin(), players_.end(), player);
  if (it == players_.end()) fail(Errc::kUnknownElement, "no player named '" + std::string(player) + "'");
  return static_cast<std::size_t>(it - players_.begin());
}

bool Game::contains(Elem profile) const { return profile < rank_.size() && rank_[profile] >= 0; }

std::optional<std::size_t> Game::position(Elem profile) const {
  if (!contains(profile)) return std::nullopt;
  return static_cast<std::size_t>(rank_[profile]);
}

Elem Game::profile_id(const std::vector<std::string>& strategy_names) const {
  if (strategy_names.size() != players_.size()) fail(Errc::kInvalidArgument, "profile has the wrong number of strategies");
  Profile p(players_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = strategies_[i].index(strategy_names[i]);
  return space_.compose(p);
}

Elem Game::deviate(Elem id, std::size_t player, Elem strategy) const {
  Profile p = space_.coordinates(id);
  p.at(player) = strategy;
  return space_.compose(p);
}

std::string Game::profile_key(Elem id) const {
  const Profile p = profile(id);
  std::string key;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) key += '|';
    key += strategies_[i].name(p[i]);
  }
  return key;
}

const Rational& Game::payoff(std::size_t player, Elem profile) const {
  auto rank = position(profile);
  if (!rank) fail(Errc::kInfeasibleProfile, "profile is not feasible");
  return payoffs_.at(player)[*rank];
}

Poset feasible_poset(const Game& g) { return induced_poset(g.profile_space(), g.feasible()); }

namespace {

void require_feasible(const Game& g, Elem x) {
  if (!g.contains(x)) {
    fail(Errc::kInfeasibleProfile,
         (x < g.profile_space().size() ? g.profile_name(x) : std::string("profile")) + " is not feasible");
  }
}

void require_player(const Game& g, std::size_t player) {
  if (player >= g.player_count()) fail(Errc::kInvalidArgument, "player index out of range");
}

}  // namespace

Subset section(const Game& g, std::size_t player, Elem x) {
  require_feasible(g, x);
  require_player(g, player);
  Subset out;
  for (Elem s = 0; s < g.strategies(player).size(); ++s) {
    if (g.contains(g.deviate(x, player, s))) out.push_back(s);
  }
  return out;
}

ProfileSet feasible_box(const Game& g, Elem x) {
  require_feasible(g, x);
  std::vector<std::vector<bool>> allowed(g.player_count());
  for (std::size_t i = 0; i < g.player_count(); ++i) {
    allowed[i].assign(g.strategies(i).size(), false);
    for (Elem s : section(g, i, x)) allowed[i][s] = true;
  }
  ProfileSet out;
  for (Elem y : g.feasible()) {
    const Profile p = g.profile(y);
    bool inside = true;
    for (std::size_t i = 0; i < p.size() && inside; ++i) inside = allowed[i][p[i]];
    if (inside) out.push_back(y);
  }
  return out;
}

SectionVerdict check_supermodular_sections(const Game& g, std::size_t player) {
  require_player(g, player);
  const Poset& lattice = g.strategies(player);
  for (Elem x : g.feasible()) {
    const Subset sec = section(g, player, x);
    // Each section is visited once, from its first strategy.
    if (g.profile(x)[player] != sec.front()) continue;
    const auto in_section = [&](Elem s) { return std::binary_search(sec.begin(), sec.end(), s); };
    for (std::size_t a = 0; a < sec.size(); ++a) {
      for (std::size_t b = a + 1; b < sec.size(); ++b) {
        const Elem y = sec[a];
        const Elem z = sec[b];
        const Elem lo = *meet(lattice, y, z);
        const Elem hi = *join(lattice, y, z);
        if (!in_section(lo) || !in_section(hi)) return {false, SectionWitness{player, x, y, z, true}};
        const auto f = [&](Elem s) -> const Rational& { return g.payoff(player, g.deviate(x, player, s)); };
        if (f(lo) + f(hi) < f(y) + f(z)) return {false, SectionWitness{player, x, y, z, false}};
      }
    }
  }
  return {};
}

DifferenceVerdict check_increasing_differences(const Game& g, std::size_t player) {
  require_player(g, player);
  const Poset& space = g.profile_space();
  const Poset& own = g.strategies(player);
  // Opponents' projection S_{-i}, each represented by the profile with the
  // player's own coordinate set to 0.
  std::vector<Elem> opponents;
  for (Elem x : g.feasible()) opponents.push_back(g.deviate(x, player, 0));
  opponents = normalize(opponents);

  for (Elem t : opponents) {
    for (Elem tp : opponents) {
      // Own coordinates agree, so product order compares opponents only.
      if (!space.less(t, tp)) continue;
      for (Elem x = 0; x < own.size(); ++x) {
        for (Elem xp = 0; xp < own.size(); ++xp) {
          if (!own.less(x, xp)) continue;
          const Elem ll = g.deviate(t, player, x);
          const Elem hl = g.deviate(t, player, xp);
          const Elem lh = g.deviate(tp, player, x);
          const Elem hh = g.deviate(tp, player, xp);
          if (!g.contains(ll) || !g.contains(hl) || !g.contains(lh) || !g.contains(hh)) continue;
          if (g.payoff(player, hl) + g.payoff(player, lh) > g.payoff(player, ll) + g.payoff(player, hh)) {
            return {false, DifferenceWitness{player, ll, hl, lh, hh}};
          }
        }
      }
    }
  }
  return {};
}

bool ValidationReport::certified() const {
  const auto all_ok = [](const auto& verdicts) {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.ok; });
  };
  return strategies_are_lattices && projections_surjective && feasible_sublattice.ok && all_ok(sections) &&
         all_ok(differences);
}

ValidationReport validate_supermodular(const Game& g) {
  ValidationReport r;
  // Both hold for every constructed Game; kept in the report for display.
  r.strategies_are_lattices = true;
  r.projections_surjective = true;
  r.feasible_sublattice = is_sublattice(g.profile_space(), g.feasible());
  for (std::size_t i = 0; i < g.player_count(); ++i) {
    r.sections.push_back(check_supermodular_sections(g, i));
    r.differences.push_back(check_increasing_differences(g, i));
  }
  return r;
}

Subset best_response(const Game& g, std::size_t player, Elem x) {
  const Subset sec = section(g, player, x);
  Subset best;
  const Rational* top = nullptr;
  for (Elem s : sec) {
    const Rational& v = g.payoff(player, g.deviate(x, player, s));
    if (!top || v > *top) {
      top = &v;
      best.assign(1, s);
    } else if (v == *top) {
      best.push_back(s);
    }
  }
  return best;
}

ProfileSet partial_response(const Game& g, std::span<const std::size_t> players, Elem x) {
  if (players.empty()) fail(Errc::kEmptyPlayerSet, "partial response needs at least one player");
  std::vector<std::size_t> group(players.begin(), players.end());
  std::sort(group.begin(), group.end());
  if (std::adjacent_find(group.begin(), group.end()) != group.end()) {
    fail(Errc::kInvalidArgument, "player listed twice");
  }
  for (std::size_t i : group) require_player(g, i);

  ProfileSet best;
  Rational top;
  for (Elem y : feasible_box(g, x)) {
    const Profile yp = g.profile(y);
    Rational total = 0;
    for (std::size_t i : group) total += g.payoff(i, g.deviate(x, i, yp[i]));
    if (best.empty() || total > top) {
      top = total;
      best.assign(1, y);
    } else if (total == top) {
      best.push_back(y);
    }
  }
  return best;
}

ProfileSet partial_response_all(const Game& g, Elem x) {
  std::vector<std::size_t> everyone(g.player_count());
  for (std::size_t i = 0; i < everyone.size(); ++i) everyone[i] = i;
  return partial_response(g, everyone, x);
}

ProfileSet joint_response(const Game& g, Elem x) {
  require_feasible(g, x);
  std::vector<std::vector<bool>> best(g.player_count());
  for (std::size_t i = 0; i < g.player_count(); ++i) {
    best[i].assign(g.strategies(i).size(), false);
    for (Elem s : best_response(g, i, x)) best[i][s] = true;
  }
  ProfileSet out;
  for (Elem y : g.feasible()) {
    const Profile p = g.profile(y);
    bool inside = true;
    for (std::size_t i = 0; i < p.size() && inside; ++i) inside = best[i][p[i]];
    if (inside) out.push_back(y);
  }
  return out;
}

}  // namespace supermod

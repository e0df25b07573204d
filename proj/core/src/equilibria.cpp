#include "supermod/equilibria.hpp"

#include <algorithm>
#include <iterator>

#include "supermod/error.hpp"

namespace supermod {

namespace {

ProfileSet intersect(const ProfileSet& a, const ProfileSet& b) {
  ProfileSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const ProfileSet& s, Elem e) { return std::binary_search(s.begin(), s.end(), e); }

std::vector<std::size_t> all_players(const Game& g) {
  std::vector<std::size_t> out(g.player_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

bool complete_in_induced_order(const Poset& ambient, const ProfileSet& members, const Limits& limits,
                               bool* exhaustive = nullptr) {
  if (members.empty()) return false;
  const Poset induced = induced_poset(ambient, members);
  const bool use_exhaustive = members.size() <= limits.exhaustive_cap;
  if (exhaustive) *exhaustive = use_exhaustive;
  return use_exhaustive ? is_complete_lattice_exhaustive(induced, limits.exhaustive_cap) : is_lattice(induced);
}

}  // namespace

ProfileSet f_set(const Game& g, std::size_t player) {
  if (player >= g.player_count()) fail(Errc::kInvalidArgument, "player index out of range");
  ProfileSet out;
  for (Elem x : g.feasible()) {
    const Rational& here = g.payoff(player, x);
    bool stable = true;
    for (Elem s : section(g, player, x)) {
      if (g.payoff(player, g.deviate(x, player, s)) > here) {
        stable = false;
        break;
      }
    }
    if (stable) out.push_back(x);
  }
  return out;
}

EquilibriumSet equilibria_bruteforce(const Game& g) {
  EquilibriumSet e;
  for (std::size_t i = 0; i < g.player_count(); ++i) e.per_player.push_back(f_set(g, i));
  e.profiles = e.per_player.front();
  for (std::size_t i = 1; i < e.per_player.size(); ++i) e.profiles = intersect(e.profiles, e.per_player[i]);
  return e;
}

ProfileSet fixed_points(const Game& g, ResponseKind kind, std::span<const std::size_t> players) {
  if (kind == ResponseKind::kPartial && players.empty()) {
    fail(Errc::kEmptyPlayerSet, "fixed points of Y_I need a nonempty player set");
  }
  ProfileSet fixed;
  for (Elem x : g.feasible()) {
    const ProfileSet image = kind == ResponseKind::kJoint ? joint_response(g, x) : partial_response(g, players, x);
    if (contains(image, x)) fixed.push_back(x);
  }

  ProfileSet expected;
  if (kind == ResponseKind::kJoint) {
    expected = equilibria_bruteforce(g).profiles;
  } else {
    expected = f_set(g, players.front());
    for (std::size_t k = 1; k < players.size(); ++k) expected = intersect(expected, f_set(g, players[k]));
  }
  if (fixed != expected) {
    fail(Errc::kInternalContradiction, kind == ResponseKind::kJoint
                                           ? "fixed points of R differ from the equilibrium set"
                                           : "fixed points of Y_I differ from the intersection of the F_i");
  }
  return fixed;
}

ExtremalResult iterate_extremal(const Game& g, Direction direction, ResponseKind kind) {
  const Poset& space = g.profile_space();
  const bool greatest = direction == Direction::kGreatest;
  const auto pick = [&](const ProfileSet& s) { return greatest ? maximum(space, s) : minimum(space, s); };

  const auto start = pick(g.feasible());
  if (!start) fail(Errc::kPreconditionViolated, "the feasible set has no greatest or least element");
  const auto everyone = all_players(g);

  ExtremalResult r;
  Elem x = *start;
  r.trace.push_back(x);
  while (r.steps <= g.feasible().size()) {
    const ProfileSet image = kind == ResponseKind::kJoint ? joint_response(g, x) : partial_response(g, everyone, x);
    ++r.steps;
    if (image.empty()) fail(Errc::kPreconditionViolated, "empty response at " + g.profile_name(x));
    const auto next = pick(image);
    if (!next) fail(Errc::kPreconditionViolated, "response at " + g.profile_name(x) + " has no extreme element");
    if (*next == x) {
      r.profile = x;
      return r;
    }
    x = *next;
    r.trace.push_back(x);
  }
  fail(Errc::kInternalContradiction, "monotone iteration did not converge within |S| steps");
}

ExtremalResult extremal_equilibrium(const Game& g, Direction direction) {
  if (!validate_supermodular(g).certified()) {
    fail(Errc::kPreconditionViolated, "extremal iteration requires a supermodular game");
  }
  ExtremalResult r = iterate_extremal(g, direction, ResponseKind::kPartial);
  const ProfileSet e = equilibria_bruteforce(g).profiles;
  const Poset& space = g.profile_space();
  const auto expected = direction == Direction::kGreatest ? maximum(space, e) : minimum(space, e);
  if (!expected || *expected != r.profile) {
    fail(Errc::kInternalContradiction, "iteration stopped at " + g.profile_name(r.profile) +
                                           ", which is not the extreme equilibrium");
  }
  return r;
}

TarskiZhouVerdict tarski_zhou_check(const Game& g, const Limits& limits) {
  TarskiZhouVerdict v;
  const Poset s_poset = feasible_poset(g);
  v.feasible_is_lattice = is_lattice(s_poset);

  const auto everyone = all_players(g);
  std::vector<Subset> images;
  images.reserve(g.feasible().size());
  v.values_are_sublattices = true;
  for (Elem x : g.feasible()) {
    images.push_back(partial_response(g, everyone, x));
    if (v.values_are_sublattices && (images.back().empty() || !is_sublattice(g.profile_space(), images.back()))) {
      v.values_are_sublattices = false;
      v.bad_value_at = x;
    }
  }
  ProfileSet fixed;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (contains(images[k], g.feasible()[k])) fixed.push_back(g.feasible()[k]);
  }
  v.increasing = is_increasing_correspondence(make_correspondence(s_poset, g.profile_space(), std::move(images)));
  v.fixed_points_nonempty = !fixed.empty();
  v.fixed_points_complete = complete_in_induced_order(g.profile_space(), fixed, limits);
  return v;
}

EquilibriumReport equilibrium_report(const Game& g, const Limits& limits) {
  EquilibriumReport r;
  r.equilibria = equilibria_bruteforce(g);
  r.supermodular = validate_supermodular(g).certified();
  const ProfileSet& e = r.equilibria.profiles;
  const Poset& space = g.profile_space();
  r.nonempty = !e.empty();
  if (r.nonempty) {
    r.induced_is_lattice = is_lattice(induced_poset(space, e));
    r.induced_is_complete = complete_in_induced_order(space, e, limits, &r.completeness_exhaustive);
    r.max_equilibrium = maximum(space, e);
    r.min_equilibrium = minimum(space, e);

    const Poset s_poset = feasible_poset(g);
    Subset positions;
    for (Elem x : e) positions.push_back(*g.position(x));
    try {
      r.sublattice_of_feasible = is_sublattice(s_poset, positions).ok;
      r.subcomplete_in_feasible = is_subcomplete(s_poset, positions, limits.exhaustive_cap).ok;
    } catch (const Error& err) {
      if (err.code() != Errc::kNotALattice) throw;
      r.sublattice_of_feasible.reset();
      r.subcomplete_in_feasible.reset();
    }
  }
  if (r.supermodular) {
    if (!r.nonempty || !r.induced_is_complete) {
      fail(Errc::kInternalContradiction, "supermodular game whose equilibria are not a nonempty complete lattice");
    }
    r.greatest = extremal_equilibrium(g, Direction::kGreatest);
    r.least = extremal_equilibrium(g, Direction::kLeast);
  }
  return r;
}

}  // namespace supermod

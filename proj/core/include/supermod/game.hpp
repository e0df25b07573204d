#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supermod/limits.hpp"
#include "supermod/poset.hpp"
#include "supermod/rational.hpp"

namespace supermod {

// One strategy index per player, in player order.
using Profile = std::vector<Elem>;
// Sorted element indices of Game::profile_space(). Ascending index order is
// lexicographic strategy order with the first player most significant.
using ProfileSet = std::vector<Elem>;

// Returns nullopt when the payoff of `player` at `profile` is not defined.
using PayoffFn = std::function<std::optional<Rational>(std::size_t player, const Profile& profile)>;

// A noncooperative game with an explicit feasible set S inside the product of
// the players' strategy lattices and exact payoffs on S.
//
// Construction enforces: unique player names, lattice strategy sets, a
// nonempty duplicate-free S whose projection onto every player is onto, and a
// payoff for every player at every feasible profile.
class Game {
 public:
  // `feasible` == nullopt selects the whole product.
  Game(std::string name, std::vector<std::string> players, std::vector<Poset> strategies,
       std::optional<std::vector<Profile>> feasible, const PayoffFn& payoff, const Limits& limits = {});

  const std::string& name() const { return name_; }
  std::size_t player_count() const { return players_.size(); }
  const std::vector<std::string>& players() const { return players_; }
  std::size_t player_index(std::string_view player) const;
  const Poset& strategies(std::size_t player) const { return strategies_.at(player); }

  // Product of the strategy lattices; profiles are its elements.
  const Poset& profile_space() const { return space_; }
  const ProfileSet& feasible() const { return feasible_; }
  bool is_product_form() const { return feasible_.size() == space_.size(); }
  bool contains(Elem profile) const;
  // Rank of a feasible profile inside feasible().
  std::optional<std::size_t> position(Elem profile) const;

  Profile profile(Elem id) const { return space_.coordinates(id); }
  Elem profile_id(const Profile& p) const { return space_.compose(p); }
  Elem profile_id(const std::vector<std::string>& strategy_names) const;
  // The profile with player i's strategy replaced.
  Elem deviate(Elem id, std::size_t player, Elem strategy) const;
  // "(a,b)" and "a|b".
  const std::string& profile_name(Elem id) const { return space_.name(id); }
  std::string profile_key(Elem id) const;

  // Throws kInfeasibleProfile outside S.
  const Rational& payoff(std::size_t player, Elem profile) const;

 private:
  std::string name_;
  std::vector<std::string> players_;
  std::vector<Poset> strategies_;
  Poset space_;
  ProfileSet feasible_;
  std::vector<std::int32_t> rank_;             // per product element, -1 if infeasible
  std::vector<std::vector<Rational>> payoffs_;  // [player][rank]
};

// S as a poset in the product order; element k is feasible()[k].
Poset feasible_poset(const Game& g);

// S_i(x_{-i}): strategies y of player i with (y, x_{-i}) feasible.
// Throws kInfeasibleProfile.
Subset section(const Game& g, std::size_t player, Elem x);

// S(x): feasible y with y_i in S_i(x_{-i}) for every player i.
ProfileSet feasible_box(const Game& g, Elem x);

struct SectionWitness {
  std::size_t player = 0;
  Elem profile = 0;   // x; the section is S_i(x_{-i})
  Elem y = 0;         // strategies of player i
  Elem z = 0;
  bool bound_outside_section = false;  // y meet z or y join z left the section
};

struct SectionVerdict {
  bool ok = true;
  std::optional<SectionWitness> witness;
  explicit operator bool() const { return ok; }
};

// f_i(y meet z, x_{-i}) + f_i(y join z, x_{-i}) >= f_i(y, x_{-i}) + f_i(z, x_{-i})
// for every x in S and y, z in S_i(x_{-i}).
SectionVerdict check_supermodular_sections(const Game& g, std::size_t player);

struct DifferenceWitness {
  std::size_t player = 0;
  // Feasible profiles (x,t), (x',t), (x,t'), (x',t') with x < x', t < t'.
  Elem low_low = 0;
  Elem high_low = 0;
  Elem low_high = 0;
  Elem high_high = 0;
};

struct DifferenceVerdict {
  bool ok = true;
  std::optional<DifferenceWitness> witness;
  explicit operator bool() const { return ok; }
};

// f_i(x',t) + f_i(x,t') <= f_i(x,t) + f_i(x',t') whenever x < x' in S_i,
// t < t' among opponents' profiles, and all four profiles are feasible.
DifferenceVerdict check_increasing_differences(const Game& g, std::size_t player);

struct ValidationReport {
  bool strategies_are_lattices = true;
  bool projections_surjective = true;
  SublatticeVerdict feasible_sublattice;
  std::vector<SectionVerdict> sections;        // per player
  std::vector<DifferenceVerdict> differences;  // per player

  bool certified() const;
};

ValidationReport validate_supermodular(const Game& g);

// Y_i(x): argmax over S_i(x_{-i}) of f_i(., x_{-i}), ties kept.
Subset best_response(const Game& g, std::size_t player, Elem x);

// Y_I(x): argmax over S(x) of sum over i in I of f_i(y_i, x_{-i}).
// Throws kEmptyPlayerSet, kInvalidArgument for unknown or repeated players.
ProfileSet partial_response(const Game& g, std::span<const std::size_t> players, Elem x);

// All players at once (Y_N).
ProfileSet partial_response_all(const Game& g, Elem x);

// R(x) = (product of Y_i(x)) intersected with S. May be empty.
ProfileSet joint_response(const Game& g, Elem x);

}  // namespace supermod

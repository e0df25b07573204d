#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "supermod/game.hpp"
#include "supermod/limits.hpp"

namespace supermod {

// F_i: feasible x at which no feasible unilateral deviation of player i pays
// strictly more.
ProfileSet f_set(const Game& g, std::size_t player);

struct EquilibriumSet {
  ProfileSet profiles;                 // E, the intersection of all F_i
  std::vector<ProfileSet> per_player;  // F_i, kept for audit
};

// E by definition; the reference every other route is compared with.
EquilibriumSet equilibria_bruteforce(const Game& g);

enum class ResponseKind {
  kJoint,    // R(x) = (prod_i Y_i(x)) cap S
  kPartial,  // Y_I(x) for a nonempty player set I
};

// {x in S : x in C(x)}. The result is checked against the brute-force sets
// (Fix(R) = E, Fix(Y_I) = intersection of F_i over I) and a mismatch raises
// kInternalContradiction. Throws kEmptyPlayerSet for kPartial with no players.
ProfileSet fixed_points(const Game& g, ResponseKind kind, std::span<const std::size_t> players = {});

enum class Direction { kGreatest, kLeast };

struct ExtremalResult {
  Elem profile = 0;
  // x0 = max S (min S), then each distinct iterate; ends at `profile`.
  std::vector<Elem> trace;
  // Number of times the response was evaluated.
  std::size_t steps = 0;
};

// Iterates x <- max C(x) (or min C(x)) from the top (bottom) of S, with C the
// joint response R or the best partial response Y_N.
//
// For a supermodular game Y_N is increasing with lattice values, so for
// x <= x' the join max C(x) v max C(x') lies in C(x') and therefore
// max C(x) <= max C(x'). Starting from max S the iterates decrease and stop
// at the greatest fixed point within |S| steps; dually from min S.
//
// No hypotheses are checked: throws kPreconditionViolated if S or a value
// lacks the selected extreme, kInternalContradiction if |S| steps do not
// converge.
ExtremalResult iterate_extremal(const Game& g, Direction direction, ResponseKind kind = ResponseKind::kPartial);

// iterate_extremal on Y_N after validate_supermodular passes (otherwise
// kPreconditionViolated); the result must equal the max (min) of the
// brute-force equilibrium set, or kInternalContradiction is raised.
ExtremalResult extremal_equilibrium(const Game& g, Direction direction);

struct TarskiZhouVerdict {
  bool feasible_is_lattice = false;
  CorrespondenceVerdict increasing;  // Y_N on S; witness indices refer to feasible_poset(g) / profile ids
  bool values_are_sublattices = false;
  std::optional<Elem> bad_value_at;  // x with Y_N(x) empty or not a sublattice
  bool fixed_points_nonempty = false;
  bool fixed_points_complete = false;

  bool hypotheses_hold() const { return feasible_is_lattice && increasing.ok && values_are_sublattices; }
  bool conclusion_holds() const { return fixed_points_nonempty && fixed_points_complete; }
};

// Checks the fixed-point theorem's hypotheses for Y_N on the concrete game
// (S a complete lattice, Y_N increasing, every Y_N(x) a nonempty sublattice)
// and its conclusion (Fix(Y_N) a nonempty complete lattice). Never throws on
// failed hypotheses; they are reported.
TarskiZhouVerdict tarski_zhou_check(const Game& g, const Limits& limits = {});

struct EquilibriumReport {
  EquilibriumSet equilibria;
  bool supermodular = false;
  bool nonempty = false;
  bool induced_is_lattice = false;
  bool induced_is_complete = false;
  bool completeness_exhaustive = false;
  // Absent when S itself lacks a needed join or meet.
  std::optional<bool> sublattice_of_feasible;
  std::optional<bool> subcomplete_in_feasible;
  std::optional<Elem> max_equilibrium;
  std::optional<Elem> min_equilibrium;
  // Present for supermodular games.
  std::optional<ExtremalResult> greatest;
  std::optional<ExtremalResult> least;
};

// For supermodular games a nonempty E that is a complete lattice in the
// induced order is required; anything else raises kInternalContradiction.
EquilibriumReport equilibrium_report(const Game& g, const Limits& limits = {});

}  // namespace supermod

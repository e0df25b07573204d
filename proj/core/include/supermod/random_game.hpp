#pragma once

#include <cstdint>

#include "supermod/game.hpp"

namespace supermod {

enum class FeasibilityMode {
  kProduct,     // S is the whole product
  kSublattice,  // S is a random sublattice of the product
  kMixed,       // chosen per game by a coin flip
};

// Parameters of the random supermodular game generator. Strategies are
// integer chains 0 < 1 < ... and player i's payoff is
//   f_i(x) = sum_j a_ij x_j + sum_{j<k} b_ijk x_j x_k
// with a_ij drawn from [linear_min, linear_max], b_ijk from
// [0, interaction_max], each divided by a denominator drawn from
// [1, denominator_max]. Nonnegative interactions give increasing differences,
// and any payoff is supermodular on a chain.
struct RandomGameSpec {
  std::size_t min_players = 2;
  std::size_t max_players = 2;
  std::size_t min_chain = 2;
  std::size_t max_chain = 3;
  FeasibilityMode feasibility = FeasibilityMode::kProduct;
  std::int64_t linear_min = -3;
  std::int64_t linear_max = 3;
  std::int64_t interaction_max = 2;
  std::int64_t denominator_max = 1;

  // 2-4 players, chains of length 2-4, mixed feasibility, small rationals.
  static RandomGameSpec corpus();
};

// Deterministic in (spec, seed). Throws kSpecOutOfRange unless
// 1 <= min_players <= max_players <= 4, 1 <= min_chain <= max_chain <= 4,
// linear_min <= linear_max, interaction_max >= 0, denominator_max >= 1.
Game random_supermodular_game(const RandomGameSpec& spec, std::uint64_t seed, const Limits& limits = {});

}  // namespace supermod
